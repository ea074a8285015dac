"""Acceptance gate: one test (and one printed pass/fail line) per criterion.

Criterion 9's stretch part needs an externally supplied character table for
the largest group and is exercised only when CONJGEN_STRETCH_TABLE is set.
"""

import os

import pytest

from conjgen import suite


def _run(number, **kwargs):
    ok, detail = suite.CRITERIA[number](**kwargs)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_structure_constant_oracle_equivalence():
    _run(1)


def test_criterion_2_m_n_relation():
    _run(2)


def test_criterion_3_fixed_space_fixture():
    _run(3)


def test_criterion_4_j2_reproduction():
    _run(4)


def test_criterion_5_mcl_reproduction():
    _run(5)


def test_criterion_6_hs_reproduction():
    _run(6)


def test_criterion_7_beta2_property_suite():
    _run(7)


def test_criterion_8_fusion_soundness():
    _run(8)


def test_criterion_9_property_substitute():
    _run(9)


@pytest.mark.skipif(not os.environ.get("CONJGEN_STRETCH_TABLE"),
                    reason="stretch tier needs an external character table "
                           "(set CONJGEN_STRETCH_TABLE)")
def test_criterion_9_stretch_character_bound():
    _run(9, suz_table=os.environ["CONJGEN_STRETCH_TABLE"])
