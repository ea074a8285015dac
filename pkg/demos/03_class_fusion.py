"""Class fusion: how subgroup classes sit inside the big group.

Given a subgroup H <= G, each conjugacy class of H lands inside a single
class of G; the induced map on class indices is the fusion map.  With an
explicit embedding (generators of H as permutations in G's domain) the
map can be computed directly.  With character tables alone, the possible
fusion maps can be enumerated: order preservation, centralizer
divisibility, compatibility with power maps, and integrality of
restricted-character inner products cut the candidates down to a short
list that always contains the true map.
"""

from conjgen.chartab import load_table, match_classes
from conjgen.fusion import fusion_from_embedding, possible_fusions
from conjgen.perm import from_cycles
from conjgen.permgroup import load_group
from conjgen.suite import data_path


def main():
    G = load_group(data_path("a5.grp"))
    # A4 inside A5 as the stabilizer of the last point
    gens = [from_cycles(5, [(0, 1), (2, 3)]), from_cycles(5, [(0, 1, 2)])]
    fmap, H, Hcls, Gcls = fusion_from_embedding(G, gens, name="a4")

    print(f"== embedding fusion: |H| = {H.order()} inside |G| = {G.order()} ==")
    for i, j in enumerate(fmap.map):
        print(f"  {Hcls[i].label} (order {Hcls[i].element_order}, "
              f"size {Hcls[i].size}) -> {Gcls[j].label} "
              f"(size {Gcls[j].size})")
    print("note: both classes of 3-cycles of A4 fuse into the single")
    print("3-cycle class of A5, while the A5 classes 5a/5b miss A4 entirely")

    print()
    print("== table-only candidates ==")
    tH, tG = load_table(data_path("a4.ctab")), load_table(data_path("a5.ctab"))
    cands = possible_fusions(tH, tG)
    for f in cands:
        print(f"  candidate map: {list(f.map)}")

    # line the embedding-derived map up with table indices and confirm it
    # appears among the candidates
    mpH, _ = match_classes(H, tH)
    mpG, _ = match_classes(G, tG)
    truth = [None] * len(Hcls)
    for i in range(len(Hcls)):
        truth[mpH[i]] = mpG[fmap.map[i]]
    print(f"  true map (table indexing): {truth}")
    assert any(list(f.map) == truth for f in cands)
    print("  true map is among the candidates")


if __name__ == "__main__":
    main()
