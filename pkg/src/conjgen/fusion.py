"""Class fusion maps between a subgroup and an overgroup.

fusion_from_embedding computes the true fusion from explicit subgroup
generators inside a permutation group.  possible_fusions enumerates every
map between two character tables consistent with element orders,
centralizer divisibility, power-map commutation and character restriction
integrality; the true fusion always survives the filter, although extra
candidates may too.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import perm
from .chartab import TableError
from .cyclotomic import Cyclotomic
from .permgroup import PermutationGroup


class FusionError(Exception):
    pass


@dataclass(frozen=True)
class FusionMap:
    source: str
    target: str
    map: tuple

    def __len__(self):
        return len(self.map)


def fusion_from_embedding(G, H_generators, name="subgroup"):
    """Fusion of the classes of H = <H_generators> into the classes of G.

    Class indices follow conjugacy_classes() ordering on each side.
    """
    for h in H_generators:
        if not G.is_member(h):
            raise FusionError("subgroup generator is not an element of G")
    H = PermutationGroup(G.degree, list(H_generators), name=name)
    Hcls = H.conjugacy_classes()
    Gcls = G.conjugacy_classes()
    mapping = []
    for hc in Hcls:
        target = None
        for j, gc in enumerate(Gcls):
            if gc.element_order != hc.element_order:
                continue
            if G.is_conjugate(hc.representative,
                              gc.representative) is not None:
                target = j
                break
        if target is None:
            raise FusionError(
                f"no G-class found for subgroup class {hc.label}")
        mapping.append(target)
    return FusionMap(source=H.name or name, target=G.name or "group",
                     map=tuple(mapping)), H, Hcls, Gcls


def _restriction_integral(tableH, tableG, mapping):
    """Condition (d): every restricted irreducible of G decomposes with
    nonnegative integer multiplicities against the irreducibles of H."""
    cents = [c.centralizer_order for c in tableH.classes]
    for chi in tableG.irreducibles:
        restricted = [chi[mapping[k]] for k in range(tableH.n_classes)]
        for psi in tableH.irreducibles:
            s = Cyclotomic.from_rational(0)
            for k in range(tableH.n_classes):
                s = s + restricted[k] * psi[k].conj() / cents[k]
            if not s.is_rational():
                return False
            q = s.to_rational()
            if q.denominator != 1 or q < 0:
                return False
    return True


def possible_fusions(tableH, tableG, node_cap=10 ** 6):
    """All class maps H -> G surviving the constraint filter.

    Filters: element orders preserved; subgroup centralizer order divides
    the overgroup one; commutation with every stored power map; integral
    nonnegative restriction multiplicities.  Complete backtracking with
    fail-first ordering; the result is sorted lexicographically.
    """
    if tableH.is_frame or tableG.is_frame:
        raise TableError("fusion search needs full tables on both sides")
    nH, nG = tableH.n_classes, tableG.n_classes
    cands = []
    for k, ch in enumerate(tableH.classes):
        cs = {j for j, cg in enumerate(tableG.classes)
              if cg.element_order == ch.element_order
              and cg.centralizer_order % ch.centralizer_order == 0}
        cands.append(cs)
    cands[0] &= {0}

    primes = sorted(set(tableH.power_maps) & set(tableG.power_maps))

    def propagate(cands):
        changed = True
        while changed:
            changed = False
            for p in primes:
                pmH = tableH.power_maps[p]
                pmG = tableG.power_maps[p]
                for k in range(nH):
                    kp = pmH[k]
                    forward = {pmG[j] for j in cands[k]}
                    new_kp = cands[kp] & forward
                    if new_kp != cands[kp]:
                        cands[kp] = new_kp
                        changed = True
                    back = {j for j in cands[k] if pmG[j] in cands[kp]}
                    if back != cands[k]:
                        cands[k] = back
                        changed = True
            if any(not c for c in cands):
                return False
        return True

    results = []
    nodes = [0]

    def search(cands):
        nodes[0] += 1
        if nodes[0] > node_cap:
            raise FusionError(f"fusion search exceeded {node_cap} nodes")
        if not propagate(cands):
            return
        open_ks = [k for k in range(nH) if len(cands[k]) > 1]
        if not open_ks:
            mapping = tuple(next(iter(c)) for c in cands)
            if _restriction_integral(tableH, tableG, mapping):
                results.append(FusionMap(source=tableH.name,
                                         target=tableG.name, map=mapping))
            return
        k = min(open_ks, key=lambda k: len(cands[k]))
        for j in sorted(cands[k]):
            nxt = [set(c) for c in cands]
            nxt[k] = {j}
            search(nxt)

    search(cands)
    results.sort(key=lambda f: f.map)
    return results
