import itertools

import pytest

from conjgen import perm
from conjgen.permgroup import PermutationGroup, build_chain
from conjgen.betasolver import (GroupPair, beta_exact, alpha_exact,
                                beta_upper_char, verify_report, BetaError)


def whole_group_pair(G, x):
    return GroupPair(G, G.generators, x)


def test_pair_validation(groups):
    G = groups("a5")
    x = G.evaluate_word("b")
    with pytest.raises(BetaError):
        GroupPair(G, [G.evaluate_word("a")], x)  # <3-cycle> not normal in A5
    from conjgen.perm import from_cycles
    a4 = groups("a4")
    with pytest.raises(BetaError):
        GroupPair(a4, a4.generators, from_cycles(4, [(0, 1)]))  # x not in A4


def test_value_one_rule(groups):
    G = groups("a5")
    x5 = G.evaluate_word("b")
    pair = whole_group_pair(G, x5)
    assert beta_exact(pair, 5).value == 1
    assert beta_exact(pair, 2).value == 2
    assert beta_exact(pair, 3).value == 2


def test_alpha_one_when_x_generates(groups):
    s3 = groups("s3")
    x = s3.evaluate_word("b")
    A3 = PermutationGroup(3, [x], names=["x"])
    assert alpha_exact(GroupPair(A3, [x], x)).value == 1


def test_alpha_two_for_a5_five_cycle(groups):
    G = groups("a5")
    pair = whole_group_pair(G, G.evaluate_word("b"))
    rep = alpha_exact(pair)
    assert rep.value == 2
    assert verify_report(pair, rep)


def test_beta_bounded_by_alpha(groups):
    G = groups("s4")
    for cd in G.conjugacy_classes():
        if cd.element_order == 1:
            continue
        pair = whole_group_pair(G, cd.representative)
        al = alpha_exact(pair)
        for r in (2, 3):
            be = beta_exact(pair, r)
            if be.exact and al.exact:
                assert be.value <= al.value


def test_first_entry_fixed_is_sound(groups):
    # exhaustive check: fixing the first tuple entry to x never changes the
    # minimum, for every class and predicate on S4
    G = groups("s4")
    for cd in G.conjugacy_classes():
        if cd.element_order == 1:
            continue
        orbit = G.class_orbit(cd.representative)
        for r in (2, 3):
            # unrestricted minimum over pairs
            free2 = any(
                build_chain(G.degree, [u, v]).order() % r == 0
                for u in orbit.elements for v in orbit.elements)
            fixed2 = any(
                build_chain(G.degree,
                            [cd.representative, v]).order() % r == 0
                for v in orbit.elements)
            assert free2 == fixed2


def test_reduction_matches_exhaustive(groups):
    for name in ("s4", "a5", "d8", "q8"):
        G = groups(name)
        for cd in G.conjugacy_classes():
            if cd.element_order == 1:
                continue
            pair = whole_group_pair(G, cd.representative)
            for r in (2, 3, 5):
                if G.order() % r:
                    continue
                a = beta_exact(pair, r, k_max=3)
                b = beta_exact(pair, r, k_max=3, reduction=False)
                assert a.value == b.value


def test_interval_when_not_found(groups):
    G = groups("q8")
    x = next(c for c in G.conjugacy_classes()
             if c.element_order == 4).representative
    pair = whole_group_pair(G, x)
    # no number of conjugates of an order-4 element of Q8 reaches order
    # divisible by 3
    rep = beta_exact(pair, 3, k_max=3)
    assert not rep.exact
    assert rep.value == (3, None)
    assert rep.witnesses == []


def test_witnesses_re_verify(groups):
    G = groups("m11")
    x = G.evaluate_word("b")  # order 4
    pair = whole_group_pair(G, x)
    rep = beta_exact(pair, 11)
    assert rep.value in (2, 3)
    assert verify_report(pair, rep)


def test_trace_is_complete(groups):
    G = groups("a5")
    pair = whole_group_pair(G, G.evaluate_word("a"))  # order 3 word? a=(012)
    rep = beta_exact(pair, 5)
    ks = [t["k"] for t in rep.trace]
    assert ks == list(range(1, rep.value + 1))


def test_rejects_composite_r(groups):
    G = groups("a5")
    pair = whole_group_pair(G, G.evaluate_word("b"))
    with pytest.raises(BetaError):
        beta_exact(pair, 6)


def test_upper_char_a5(tables):
    t = tables("a5")
    assert beta_upper_char(t, t.index_of("2a"), 5) == 2
    assert beta_upper_char(t, t.index_of("3a"), 5) == 2


def test_upper_char_j2_level3(tables):
    t = tables("j2")
    c = t.index_of("3a")
    from conjgen.structconst import m_coeff
    for d in t.classes_with_order_divisible_by(7):
        assert m_coeff(t, [c, c], d) == 0
    assert beta_upper_char(t, c, 7) == 3


def test_upper_char_consistent_with_exact(groups, tables):
    G, t = groups("a5"), tables("a5")
    from conjgen.chartab import match_classes
    mapping, _ = match_classes(G, t)
    cls = G.conjugacy_classes()
    for i, cd in enumerate(cls):
        if cd.element_order == 1:
            continue
        for r in (2, 3, 5):
            bound = beta_upper_char(t, mapping[i], r)
            if bound is None:
                continue
            pair = whole_group_pair(G, cd.representative)
            assert beta_exact(pair, r).value <= bound


def test_threads_do_not_change_witnesses(groups):
    G = groups("a6")
    x = next(c for c in G.conjugacy_classes()
             if c.element_order == 5).representative
    pair = whole_group_pair(G, x)
    r1 = beta_exact(pair, 3, threads=1)
    r2 = beta_exact(pair, 3, threads=3)
    assert r1.value == r2.value
    assert [[perm.key(w) for w in t] for t in r1.witnesses] == \
           [[perm.key(w) for w in t] for t in r2.witnesses]
