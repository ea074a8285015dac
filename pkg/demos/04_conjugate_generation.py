"""Conjugate generation: alpha and beta_r for a sporadic group class.

For x in G, alpha(x) is the least k such that some k conjugates of x
generate G.  The refinement beta_r(x) is the least k such that x
together with k-1 further conjugates generates a subgroup of order
divisible by the prime r.  Two easy facts anchor the search:

  * beta_r(x) = 1 exactly when r divides |x|;
  * beta_r(x) <= alpha(x) whenever both are finite.

The search space (tuples of conjugates) is cut down by centralizer-orbit
reduction, and every reported witness re-verifies independently.  A
purely character-theoretic test supplies matching upper bounds: if some
product of two class members lands in a class of order divisible by r,
then beta_r <= 2, and similarly at the next level.

This reproduces the values for the class 3a of the Hall-Janko group J2:
beta_2 = beta_5 = 2, beta_7 = 3, alpha = 3.
"""

from conjgen.betasolver import (GroupPair, alpha_exact, beta_exact,
                                beta_upper_char, verify_report)
from conjgen.chartab import load_table
from conjgen.permgroup import load_group
from conjgen.suite import data_path


def main():
    G = load_group(data_path("j2.grp"))
    x = G.evaluate_word("(abab^2)^4")
    cd = G.conjugacy_class(x)
    print(f"|G| = {G.order()}, x has order {cd.element_order}, "
          f"|C_G(x)| = {cd.centralizer_order}")

    pair = GroupPair(G, G.generators, x)

    for r in (2, 3, 5, 7):
        rep = beta_exact(pair, r, threads=2)
        tag = "r divides |x|" if rep.value == 1 else \
              f"witness re-verifies: {verify_report(pair, rep)}"
        print(f"beta_{r}(x) = {rep.value}   ({tag})")

    al = alpha_exact(pair, threads=2)
    print(f"alpha(x) = {al.value}   "
          f"(witness re-verifies: {verify_report(pair, al)})")

    print()
    print("== character-side upper bounds ==")
    t = load_table(data_path("j2.ctab"))
    c = t.index_of("3a")
    for r in (2, 5, 7):
        print(f"beta_{r}(3a) <= {beta_upper_char(t, c, r)} from the table")


if __name__ == "__main__":
    main()
