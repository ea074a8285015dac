import json
import random

import numpy as np
import pytest

from conjgen import perm
from conjgen.permgroup import (PermutationGroup, build_chain, load_group,
                               save_group, evaluate_word, WordError,
                               orbit_min_reps, diagonal_orbit_rep_indices)
from tests.conftest import data_file


def sym(n):
    gens = [perm.from_cycles(n, [(0, 1)]),
            perm.from_cycles(n, [tuple(range(n))])]
    return PermutationGroup(n, gens, names=["t", "c"])


def test_symmetric_group_orders():
    import math
    for n in range(2, 8):
        assert sym(n).order() == math.factorial(n)


def test_membership_and_sifting():
    G = sym(5)
    rng = random.Random(0)
    for _ in range(20):
        g = G.random_element(rng)
        assert G.is_member(g)
    odd_point = perm.from_cycles(6, [(4, 5)])
    assert not sym(5).is_member is None  # sanity of attribute
    A5 = PermutationGroup(5, [perm.from_cycles(5, [(0, 1, 2)]),
                              perm.from_cycles(5, [(0, 1, 2, 3, 4)])])
    assert A5.order() == 60
    assert not A5.is_member(perm.from_cycles(5, [(0, 1)]))


def test_shipped_orders(groups):
    expected = {"s3": 6, "s4": 24, "d8": 8, "q8": 8, "a4": 12, "sl23": 24,
                "a5": 60, "a6": 360, "l27": 168, "m11": 7920, "u33": 6048,
                "j2": 604800, "hs": 44352000, "mcl": 898128000}
    for name, order in expected.items():
        assert groups(name).order() == order


def test_class_data_on_a5(groups):
    cls = groups("a5").conjugacy_classes()
    assert [c.size for c in cls] == [1, 15, 20, 12, 12]
    assert [c.element_order for c in cls] == [1, 2, 3, 5, 5]
    assert cls[0].label == "1a"
    assert cls[3].label_ambiguous and cls[4].label_ambiguous


def test_centralizer_matches_class_size(groups):
    G = groups("m11")
    for cd in G.conjugacy_classes():
        C = G.centralizer(cd.representative)
        assert C.order() == cd.centralizer_order
        for g in C.generators:
            assert (perm.conjugate(cd.representative, g)
                    == cd.representative).all()


def test_word_evaluation(groups):
    G = groups("j2")
    a = G.named_generator("a")
    b = G.named_generator("b")
    w = G.evaluate_word("abab^2")
    manual = perm.compose(perm.compose(perm.compose(a, b), a),
                          perm.compose(b, b))
    assert (w == manual).all()
    assert (G.evaluate_word("(ab)^-1")
            == perm.inverse(perm.compose(a, b))).all()


def test_word_errors(groups):
    G = groups("s3")
    for bad in ["", "c", "a^", "(ab", "a)"]:
        with pytest.raises(WordError):
            G.evaluate_word(bad)


def test_group_file_round_trip(tmp_path, groups):
    G = groups("a6")
    path = tmp_path / "a6.grp"
    save_group(G, path)
    H = load_group(path)
    assert H.order() == G.order()
    assert H.generator_names == G.generator_names
    doc = json.loads(path.read_text())
    assert doc["metadata"]["expected_order"] == 360


def test_load_rejects_wrong_expected_order(tmp_path, groups):
    path = tmp_path / "bad.grp"
    save_group(groups("s3"), path)
    doc = json.loads(path.read_text())
    doc["metadata"]["expected_order"] = 7
    path.write_text(json.dumps(doc))
    with pytest.raises(ValueError):
        load_group(path)


def test_orbit_reduction_covers_class(groups):
    # arity-1 diagonal orbit reps hit every centralizer orbit exactly once
    G = groups("a5")
    cd = G.conjugacy_classes()[2]  # 3-cycles
    orbit = G.class_orbit(cd.representative)
    C = G.centralizer(cd.representative)
    reps = orbit_min_reps(C.generators, orbit)
    seen = set()
    for i in reps:
        part = {i}
        frontier = [i]
        while frontier:
            j = frontier.pop()
            for g in C.generators:
                z = perm.conjugate(orbit.elements[j], g)
                jj = orbit.index[perm.key(z)]
                if jj not in part:
                    part.add(jj)
                    frontier.append(jj)
        assert not (part & seen)
        seen |= part
    assert len(seen) == len(orbit)


def test_diagonal_rep_tuples_complete(groups):
    # arity-2 orbit reps generate all ordered pairs under the diagonal action
    G = groups("s4")
    cd = next(c for c in G.conjugacy_classes() if c.label == "2b")
    orbit = G.class_orbit(cd.representative)
    C = G.centralizer(cd.representative)
    tups = diagonal_orbit_rep_indices(C.generators, C.order(), orbit, 2)
    covered = set()
    for t in tups:
        stack = [t]
        part = {t}
        while stack:
            cur = stack.pop()
            for g in C.generators:
                img = tuple(orbit.index[perm.key(
                    perm.conjugate(orbit.elements[i], g))] for i in cur)
                if img not in part:
                    part.add(img)
                    stack.append(img)
        assert not (part & covered)
        covered |= part
    assert len(covered) == len(orbit) ** 2


def test_derived_subgroup(groups):
    assert groups("s4").derived_subgroup().order() == 12
    assert groups("a5").derived_subgroup().order() == 60
