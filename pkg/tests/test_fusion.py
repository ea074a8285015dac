import pytest

from conjgen.perm import from_cycles
from conjgen.chartab import match_classes
from conjgen.fusion import (fusion_from_embedding, possible_fusions,
                            FusionError)

EMBEDDINGS = {
    ("a5", "a4"): [from_cycles(5, [(0, 1), (2, 3)]),
                   from_cycles(5, [(0, 1, 2)])],
    ("s4", "s3"): [from_cycles(4, [(0, 1)]), from_cycles(4, [(0, 1, 2)])],
    ("a6", "a5"): [from_cycles(6, [(0, 1, 2)]),
                   from_cycles(6, [(0, 1, 2, 3, 4)])],
}


def table_fusion(groups, tables, gname, hname):
    G, tG = groups(gname), tables(gname)
    tH = tables(hname)
    fmap, H, Hcls, Gcls = fusion_from_embedding(
        G, EMBEDDINGS[(gname, hname)], name=hname)
    mpH, _ = match_classes(H, tH)
    mpG, _ = match_classes(G, tG)
    ftab = [None] * len(Hcls)
    for i in range(len(Hcls)):
        ftab[mpH[i]] = mpG[fmap.map[i]]
    return tuple(ftab), tH, tG


def test_embedding_fusion_basics(groups):
    G = groups("a5")
    fmap, H, Hcls, Gcls = fusion_from_embedding(G, EMBEDDINGS[("a5", "a4")])
    assert H.order() == 12
    assert fmap.map[0] == 0
    for i, j in enumerate(fmap.map):
        assert Hcls[i].element_order == Gcls[j].element_order
    # the involutions of A4 land in the single involution class of A5
    inv = next(i for i, c in enumerate(Hcls) if c.element_order == 2)
    assert Gcls[fmap.map[inv]].element_order == 2


def test_identity_fusion(groups):
    G = groups("s4")
    fmap, H, Hcls, Gcls = fusion_from_embedding(G, G.generators)
    assert H.order() == G.order()
    assert list(fmap.map) == list(range(len(Gcls)))


def test_rejects_outside_elements(groups):
    G = groups("a5")
    with pytest.raises(FusionError):
        fusion_from_embedding(G, [from_cycles(5, [(0, 1)])])


@pytest.mark.parametrize("gname,hname", [("a5", "a4"), ("s4", "s3"),
                                         ("a6", "a5")])
def test_true_fusion_among_candidates(groups, tables, gname, hname):
    ftab, tH, tG = table_fusion(groups, tables, gname, hname)
    cands = possible_fusions(tH, tG)
    assert any(f.map == ftab for f in cands)
    for f in cands:
        assert f.map[0] == 0
        for k, j in enumerate(f.map):
            assert (tH.classes[k].element_order
                    == tG.classes[j].element_order)
            assert (tG.classes[j].centralizer_order
                    % tH.classes[k].centralizer_order == 0)
            for p, pmH in tH.power_maps.items():
                assert f.map[pmH[k]] == tG.power_maps[p][j]


def test_candidates_sorted_deterministically(tables):
    cands = possible_fusions(tables("a5"), tables("a6"))
    assert [f.map for f in cands] == sorted(f.map for f in cands)


def test_incompatible_orders_give_empty_list(tables):
    # S3 has an element of order 2; A4-side target for it exists, but D8 has
    # no element of order 3, so no fusion from S3 can exist
    assert possible_fusions(tables("s3"), tables("d8")) == []


def test_centralizer_divisibility_filter(tables):
    # every candidate S3 -> J2 map must respect centralizer divisibility
    cands = possible_fusions(tables("s3"), tables("j2"))
    assert cands  # J2 certainly contains S3 subgroups
    tH, tG = tables("s3"), tables("j2")
    for f in cands:
        for k, j in enumerate(f.map):
            assert (tG.classes[j].centralizer_order
                    % tH.classes[k].centralizer_order == 0)
