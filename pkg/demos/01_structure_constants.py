"""Class multiplication coefficients, two ways.

For a finite group G with conjugacy classes C_1, ..., C_s, the number of
ways to write a fixed element z in C_k as a product x*y with x in C_i and
y in C_j can be computed exactly from the character table:

    m(C_i, C_j -> C_k) = (|C_i||C_j| / |G|) * sum_chi chi(x)chi(y)chi(z^-1) / chi(1)

The same count can be obtained by brute force on a permutation
representation.  This script does both on small groups and shows they
agree, then evaluates a coefficient on the J2 table that would be far
out of reach for enumeration.
"""

import itertools

from conjgen.chartab import load_table, match_classes
from conjgen.permgroup import load_group
from conjgen.structconst import m_coeff, n_coeff, check_relation, brute_count
from conjgen.suite import data_path


def main():
    G = load_group(data_path("s4.grp"))
    t = load_table(data_path("s4.ctab"))
    mapping, _ = match_classes(G, t)
    cls = G.conjugacy_classes()
    reps = [None] * t.n_classes
    for i, cd in enumerate(cls):
        reps[mapping[i]] = cd.representative

    print(f"== {t.name}: character formula vs. enumeration ==")
    for i, j, k in itertools.product(range(t.n_classes), repeat=3):
        via_chars = m_coeff(t, [i, j], k)
        via_count = brute_count(G, [reps[i], reps[j]], reps[k], "m")
        assert via_chars == via_count
    print(f"all {t.n_classes ** 3} triples agree")

    print()
    print("== the m/n relation ==")
    i2, i3 = t.index_of("2b"), t.index_of("3a")
    m = m_coeff(t, [i2, i2], i3)
    n = n_coeff(t, [i2, i2, t.inverse_class(i3)])
    print(f"m(2b,2b -> 3a) = {m}")
    print(f"n(2b,2b,3a^-1) = {n} "
          f"= |3a| * m = {t.class_size(i3)} * {m}")
    assert check_relation(t, [i2, i2], i3)

    print()
    print("== a coefficient beyond enumeration: J2 ==")
    tj = load_table(data_path("j2.ctab"))
    c3a = tj.index_of("3a")
    for d in tj.classes_with_order_divisible_by(7):
        lbl = tj.classes[d].label
        print(f"m(3a,3a -> {lbl}) = {m_coeff(tj, [c3a, c3a], d)}")
    print("(zero: no pair of 3a-elements multiplies into an order-7 element,")
    print(" so three conjugates are needed to reach an order divisible by 7)")


if __name__ == "__main__":
    main()
