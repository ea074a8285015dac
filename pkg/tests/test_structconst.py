import itertools
import json

import pytest

from conjgen.chartab import load_table, match_classes, TableError
from conjgen.structconst import (m_coeff, n_coeff, check_relation,
                                 brute_count, dimazal_excludes,
                                 NonIntegerResult)
from tests.conftest import data_file


def table_reps(groups, tables, name):
    G, t = groups(name), tables(name)
    mapping, _ = match_classes(G, t)
    cls = G.conjugacy_classes()
    reps = [None] * t.n_classes
    for i, cd in enumerate(cls):
        reps[mapping[i]] = cd.representative
    return G, t, reps


def test_s3_values(groups, tables):
    G, t, reps = table_reps(groups, tables, "s3")
    i2, i3 = t.index_of("2a"), t.index_of("3a")
    assert m_coeff(t, [i2, i2], i3) == 3
    assert m_coeff(t, [0, 0], i2) == 0
    assert n_coeff(t, [i2, i2, i3]) == 6
    assert n_coeff(t, [0, 0, 0]) == 1
    assert brute_count(G, [reps[i2], reps[i2]], reps[i3], "m") == 3
    assert brute_count(G, [reps[i2], reps[i2]], reps[i3], "n") == 6


def test_oracle_equivalence_q8_sl23(groups, tables):
    for name in ("q8", "sl23"):
        G, t, reps = table_reps(groups, tables, name)
        n = t.n_classes
        for i, j, k in itertools.product(range(n), repeat=3):
            assert m_coeff(t, [i, j], k) == brute_count(
                G, [reps[i], reps[j]], reps[k], "m")


def test_quadruple_oracle_a4(groups, tables):
    G, t, reps = table_reps(groups, tables, "a4")
    n = t.n_classes
    for tup in itertools.product(range(n), repeat=4):
        assert n_coeff(t, list(tup)) == brute_count(
            G, [reps[i] for i in tup[:-1]], reps[tup[-1]], "n")


def test_rotation_invariance(tables):
    t = tables("a5")
    n = t.n_classes
    for tup in itertools.product(range(n), repeat=3):
        v = n_coeff(t, list(tup))
        assert v == n_coeff(t, [tup[1], tup[2], tup[0]])


def test_relation_all_triples_s4(tables):
    t = tables("s4")
    n = t.n_classes
    for i, j, k in itertools.product(range(n), repeat=3):
        assert check_relation(t, [i, j], k)


def test_identity_relation(tables):
    t = tables("a5")
    for k in range(t.n_classes):
        kbar = t.inverse_class(k)
        assert check_relation(t, [k, kbar], 0)


def test_four_factor_m(tables):
    # m over three factor classes against n via the relation
    t = tables("s4")
    i2 = t.index_of("2a")
    i3 = t.index_of("3a")
    m = m_coeff(t, [i2, i2, i2], i3)
    assert t.class_size(i3) * m == n_coeff(
        t, [i2, i2, i2, t.inverse_class(i3)])


def test_dimazal_excludes(tables):
    t = tables("s3")
    i2, i3 = t.index_of("2a"), t.index_of("3a")
    assert dimazal_excludes(t, [i3, i3], 0)          # m = 2 < |C(1)| = 6
    assert not dimazal_excludes(t, [i2, i2], i3)     # m = 3, |C(3a)| = 3


def test_dimazal_requires_centreless_flag(tables):
    t = tables("q8")  # centre of order 2
    with pytest.raises(TableError):
        dimazal_excludes(t, [1, 1], 0)


def test_non_integer_result_on_corrupt_data(tables, tmp_path):
    # bypass load-time validation and feed corrupt values directly
    from conjgen.chartab import CharacterTable
    t = tables("s3")
    rows = [list(r) for r in t.irreducibles]
    rows[2][1] = rows[2][1] + 1
    broken = CharacterTable.__new__(CharacterTable)
    broken.name = "broken"
    broken.group_order = t.group_order
    broken.classes = t.classes
    broken.power_maps = t.power_maps
    broken.irreducibles = rows
    broken.metadata = {}
    with pytest.raises(NonIntegerResult):
        m_coeff(broken, [1, 1], 2)


def test_frame_rejected(tables):
    t = load_table(data_file("su62_frame.ctab"))
    with pytest.raises(TableError):
        m_coeff(t, [1, 1], 2)
