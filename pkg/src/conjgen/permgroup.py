"""Permutation-group engine.

Base-and-strong-generating-set (BSGS) construction via a deterministic
incremental Schreier-Sims, plus the conjugacy machinery the rest of the
toolkit runs on: classes, centralizers, conjugacy tests, subgroup orders and
centralizer-orbit reduction of tuple searches.

Convention (normative): permutations act on the right, so the word ``ab``
means "apply a, then b".  Generator words such as ``(abab^2)^4`` evaluate
under this convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import perm
from .perm import compose, inverse, identity, is_identity

__all__ = [
    "PermutationGroup",
    "ClassData",
    "ClassOrbit",
    "CapExceeded",
    "WordError",
    "evaluate_word",
    "load_group",
    "save_group",
    "DEFAULT_CLASS_CAP",
    "DEFAULT_ENUM_CAP",
]

DEFAULT_CLASS_CAP = 10**6
DEFAULT_ENUM_CAP = 10**7


class CapExceeded(RuntimeError):
    """An enumeration grew past its configured element cap."""


class WordError(ValueError):
    """Malformed generator word or unknown generator letter."""


# ---------------------------------------------------------------------------
# Stabilizer chain


class _Level:
    __slots__ = ("point", "gens", "orbit", "transversal", "queue")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.transversal: dict[int, np.ndarray] = {point: identity(degree)}
        self.queue: list[tuple[int, int]] = []  # (orbit point, gen index)

    def attach_gen(self, g: np.ndarray) -> None:
        gi = len(self.gens)
        self.gens.append(g)
        for p in list(self.orbit):
            self.queue.append((p, gi))
        self._close(seeds=list(self.orbit))

    def _close(self, seeds: list[int]) -> None:
        frontier = list(seeds)
        while frontier:
            p = frontier.pop()
            u = self.transversal[p]
            for g in self.gens:
                q = int(g[p])
                if q not in self.transversal:
                    self.transversal[q] = compose(u, g)
                    self.orbit.append(q)
                    frontier.append(q)
                    for gi in range(len(self.gens)):
                        self.queue.append((q, gi))


class StabChain:
    """Deterministic Schreier-Sims stabilizer chain."""

    def __init__(self, degree: int, initial_base: list[int] | None = None):
        self.degree = degree
        self.levels: list[_Level] = [
            _Level(b, degree) for b in (initial_base or [])
        ]

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        return prod(len(l.orbit) for l in self.levels) if self.levels else 1

    def base(self) -> list[int]:
        return [l.point for l in self.levels]

    def sift(self, g: np.ndarray, start: int = 0):
        """Return (residue, level index where sifting stopped)."""
        h = g
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            p = int(h[lvl.point])
            if p not in lvl.transversal:
                return h, i
            h = compose(h, inverse(lvl.transversal[p]))
        return h, len(self.levels)

    def contains(self, g: np.ndarray) -> bool:
        residue, _ = self.sift(g)
        return is_identity(residue)

    def stabilizer_gens(self, k: int) -> list[np.ndarray]:
        """Generators of the pointwise stabilizer of base[0:k]."""
        if k >= len(self.levels):
            return []
        return list(self.levels[k].gens)

    # -- construction --------------------------------------------------------

    def extend(self, g: np.ndarray) -> bool:
        """Add one generator; returns True if the group grew."""
        residue, j = self.sift(g)
        if is_identity(residue):
            return False
        if j == len(self.levels):
            moved = int(np.nonzero(residue != np.arange(self.degree))[0][0])
            self.levels.append(_Level(moved, self.degree))
        # The residue fixes base[0:j]; it is a strong generator for every
        # level up to and including j.
        for l in range(j + 1):
            self.levels[l].attach_gen(residue)
        for l in range(j, -1, -1):
            self._complete(l)
        return True

    def _complete(self, i: int) -> None:
        lvl = self.levels[i]
        while lvl.queue:
            p, gi = lvl.queue.pop()
            s = lvl.gens[gi]
            q = int(s[p])
            sg = compose(compose(lvl.transversal[p], s),
                         inverse(self.levels[i].transversal[q]))
            if is_identity(sg):
                continue
            residue, j = self.sift(sg, i + 1)
            if is_identity(residue):
                continue
            if j == len(self.levels):
                moved = int(np.nonzero(residue != np.arange(self.degree))[0][0])
                self.levels.append(_Level(moved, self.degree))
            for l in range(j + 1):
                self.levels[l].attach_gen(residue)
            for l in range(j, i, -1):
                self._complete(l)

    def elements(self, cap: int = DEFAULT_ENUM_CAP):
        """Yield every group element (deterministic order)."""
        if self.order() > cap:
            raise CapExceeded(
                f"group order {self.order()} exceeds enumeration cap {cap}")
        def rec(i: int, g: np.ndarray):
            if i < 0:
                yield g
                return
            lvl = self.levels[i]
            for p in lvl.orbit:
                yield from rec(i - 1, compose(g, lvl.transversal[p]))
        yield from rec(len(self.levels) - 1, identity(self.degree))


def build_chain(degree: int, generators, initial_base=None,
                target_order: int | None = None) -> StabChain:
    chain = StabChain(degree, initial_base=initial_base)
    for g in generators:
        chain.extend(g)
        if target_order is not None and chain.order() >= target_order:
            break
    return chain


# ---------------------------------------------------------------------------
# Public group object


@dataclass(frozen=True)
class ClassData:
    representative: np.ndarray
    size: int
    centralizer_order: int
    element_order: int
    label: str = ""
    label_ambiguous: bool = False


class ClassOrbit:
    """A fully stored conjugacy class with conjugating transversal.

    elements[i] is the i-th class element; transversal[i] conjugates the
    seed to it: seed^transversal[i] = elements[i].
    """

    def __init__(self, seed: np.ndarray, elements, index, transversal):
        self.seed = seed
        self.elements: list[np.ndarray] = elements
        self.index: dict[bytes, int] = index
        self.transversal: list[np.ndarray] = transversal

    def __len__(self):
        return len(self.elements)

    def position(self, x: np.ndarray) -> int | None:
        return self.index.get(perm.key(x))


class PermutationGroup:
    """Immutable permutation group with lazily built BSGS."""

    def __init__(self, degree: int, generators, names=None,
                 expected_order: int | None = None, name: str = ""):
        self.degree = degree
        self.generators = [perm.validate(g, degree) for g in generators]
        if names is None:
            names = [chr(ord("a") + i) for i in range(len(self.generators))]
        if len(names) != len(self.generators):
            raise ValueError("one name per generator required")
        self.generator_names = list(names)
        self.name = name
        self._chain: StabChain | None = None
        self._class_cache: dict[bytes, ClassOrbit] = {}
        if expected_order is not None and self.order() != expected_order:
            raise ValueError(
                f"group {name or '?'} has order {self.order()}, "
                f"expected {expected_order}")

    # -- basics --------------------------------------------------------------

    @staticmethod
    def from_generators(degree: int, generators, names=None,
                        expected_order=None, name="") -> "PermutationGroup":
        return PermutationGroup(degree, generators, names=names,
                                expected_order=expected_order, name=name)

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = build_chain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def is_member(self, x: np.ndarray) -> bool:
        if len(x) != self.degree:
            return False
        return self.chain.contains(x)

    def identity(self) -> np.ndarray:
        return identity(self.degree)

    def named_generator(self, letter: str) -> np.ndarray:
        try:
            return self.generators[self.generator_names.index(letter)]
        except ValueError:
            raise WordError(f"unknown generator {letter!r} "
                            f"(have {self.generator_names})") from None

    def evaluate_word(self, word: str) -> np.ndarray:
        return evaluate_word(self, word)

    def element_order(self, x: np.ndarray) -> int:
        return perm.order(x)

    def random_element(self, rng) -> np.ndarray:
        g = identity(self.degree)
        for lvl in self.chain.levels:
            p = lvl.orbit[rng.randrange(len(lvl.orbit))]
            g = compose(g, lvl.transversal[p])
        return g

    def elements(self, cap: int = DEFAULT_ENUM_CAP):
        yield from self.chain.elements(cap)

    # -- conjugacy -------------------------------------------------------------

    def class_orbit(self, x: np.ndarray, cap: int = DEFAULT_CLASS_CAP,
                    stop_at: np.ndarray | None = None) -> ClassOrbit | np.ndarray:
        """BFS the conjugation orbit of x under the group generators.

        With stop_at set, returns the conjugating element as soon as the
        target appears (or None if the orbit closes without it).
        """
        ck = perm.key(x)
        if stop_at is None and ck in self._class_cache:
            return self._class_cache[ck]
        stop_key = perm.key(stop_at) if stop_at is not None else None
        if stop_key == ck:
            return identity(self.degree)
        inv_gens = [(g, inverse(g)) for g in self.generators]
        elements = [x]
        index = {ck: 0}
        transversal = [identity(self.degree)]
        head = 0
        while head < len(elements):
            y = elements[head]
            u = transversal[head]
            head += 1
            for g, ginv in inv_gens:
                z = g[y[ginv]]  # y^g
                zk = perm.key(z)
                if zk in index:
                    continue
                if len(elements) >= cap:
                    raise CapExceeded(
                        f"conjugacy class larger than cap {cap}")
                index[zk] = len(elements)
                elements.append(z)
                transversal.append(compose(u, g))
                if stop_key is not None and zk == stop_key:
                    return transversal[-1]
        if stop_at is not None:
            return None
        orbit = ClassOrbit(x, elements, index, transversal)
        self._class_cache[ck] = orbit
        return orbit

    def conjugacy_class(self, x: np.ndarray,
                        cap: int = DEFAULT_CLASS_CAP) -> ClassData:
        orbit = self.class_orbit(x, cap=cap)
        size = len(orbit)
        return ClassData(representative=x, size=size,
                         centralizer_order=self.order() // size,
                         element_order=perm.order(x))

    def is_conjugate(self, x: np.ndarray, y: np.ndarray,
                     cap: int = DEFAULT_CLASS_CAP):
        """Some g with x^g = y, or None."""
        if perm.order(x) != perm.order(y):
            return None
        ck = perm.key(x)
        if ck in self._class_cache:
            pos = self._class_cache[ck].position(y)
            return None if pos is None else self._class_cache[ck].transversal[pos]
        return self.class_orbit(x, cap=cap, stop_at=y)

    def centralizer(self, x: np.ndarray,
                    cap: int = DEFAULT_CLASS_CAP) -> "PermutationGroup":
        """C_G(x) via orbit-stabilizer on the conjugation action."""
        orbit = self.class_orbit(x, cap=cap)
        target = self.order() // len(orbit)
        gens = schreier_stabilizer_gens(self, orbit, target)
        return PermutationGroup(self.degree, gens or [identity(self.degree)],
                                names=[f"c{i}" for i in range(max(1, len(gens)))],
                                name=f"C({self.name or 'G'})")

    def conjugacy_classes(self, cap: int = DEFAULT_ENUM_CAP,
                          class_cap: int = DEFAULT_CLASS_CAP) -> list[ClassData]:
        """Complete class list with synthetic labels.

        Labels are element order plus a letter; letters run in descending
        centralizer order, and classes indistinguishable by (order,
        centralizer order) are flagged ambiguous.
        """
        n = self.order()
        if n > cap:
            raise CapExceeded(f"order {n} exceeds classification cap {cap}")
        unassigned: dict[bytes, np.ndarray] = {}
        for g in self.chain.elements(cap):
            unassigned[perm.key(g)] = g
        classes = []
        element_list = list(unassigned.items())
        for k, g in element_list:
            if k not in unassigned:
                continue
            orbit = self.class_orbit(g, cap=class_cap)
            for e in orbit.elements:
                unassigned.pop(perm.key(e), None)
            rep = min(orbit.elements, key=perm.key)
            classes.append((rep, len(orbit)))
        total = sum(size for _, size in classes)
        assert total == n, "class sizes must sum to the group order"
        # identity first, then by element order, then descending centralizer
        # order, then by representative for determinism
        decorated = []
        for rep, size in classes:
            decorated.append((perm.order(rep), size, perm.key(rep), rep))
        decorated.sort(key=lambda t: (t[0], t[1], t[2]))
        out = []
        by_order: dict[int, int] = {}
        for i, (eo, size, _, rep) in enumerate(decorated):
            idx = by_order.get(eo, 0)
            by_order[eo] = idx + 1
            label = f"{eo}{_letters(idx)}"
            ambiguous = any(
                (eo, size) == (o2, s2)
                for j, (o2, s2, _, _) in enumerate(decorated) if j != i)
            out.append(ClassData(representative=rep, size=size,
                                 centralizer_order=n // size,
                                 element_order=eo, label=label,
                                 label_ambiguous=ambiguous))
        return out

    # -- subgroups ----------------------------------------------------------

    def subgroup_order(self, elements) -> int:
        for e in elements:
            if not self.is_member(e):
                raise ValueError("element outside the ambient group")
        return build_chain(self.degree, elements).order()

    def stabilizer_of_points(self, points: list[int]) -> "PermutationGroup":
        """Pointwise stabilizer, via a chain with a prescribed base prefix."""
        chain = StabChain(self.degree, initial_base=list(points))
        for g in self.generators:
            chain.extend(g)
        gens = chain.stabilizer_gens(len(points))
        return PermutationGroup(self.degree,
                                gens or [identity(self.degree)],
                                names=[f"s{i}" for i in range(max(1, len(gens)))])

    def derived_subgroup(self) -> "PermutationGroup":
        """Commutator subgroup via normal closure of generator commutators."""
        comms = []
        for a in self.generators:
            for b in self.generators:
                c = compose(compose(inverse(a), inverse(b)), compose(a, b))
                if not is_identity(c):
                    comms.append(c)
        gens = self.normal_closure_gens(comms)
        return PermutationGroup(self.degree, gens or [identity(self.degree)],
                                names=[f"d{i}" for i in range(max(1, len(gens)))])

    def normal_closure_gens(self, seeds) -> list[np.ndarray]:
        chain = StabChain(self.degree)
        kept: list[np.ndarray] = []
        work = list(seeds)
        while work:
            g = work.pop()
            if chain.extend(g):
                kept.append(g)
                for h in self.generators:
                    work.append(perm.conjugate(g, h))
        return kept


def _letters(idx: int) -> str:
    # a, b, ..., z, aa, ab, ...
    out = ""
    idx += 1
    while idx:
        idx, r = divmod(idx - 1, 26)
        out = chr(ord("a") + r) + out
    return out


def schreier_stabilizer_gens(G: PermutationGroup, orbit: ClassOrbit,
                             target_order: int) -> list[np.ndarray]:
    """A small generating set of the stabilizer of orbit.seed under the
    conjugation action, from Schreier generators, stopping once the known
    target order is reached."""
    if target_order == 1:
        return []
    chain = StabChain(G.degree)
    kept: list[np.ndarray] = []
    inv_gens = [(g, inverse(g)) for g in G.generators]
    for i, y in enumerate(orbit.elements):
        u = orbit.transversal[i]
        for g, ginv in inv_gens:
            z = g[y[ginv]]
            j = orbit.index[perm.key(z)]
            s = compose(compose(u, g), inverse(orbit.transversal[j]))
            if is_identity(s):
                continue
            if chain.extend(s):
                kept.append(s)
                if chain.order() >= target_order:
                    assert chain.order() == target_order
                    return kept
    if chain.order() != target_order:
        raise RuntimeError("stabilizer generation fell short of target order")
    return kept


# ---------------------------------------------------------------------------
# Centralizer-orbit reduction


def orbit_partition(gens, orbit: ClassOrbit) -> list[list[int]]:
    """Orbits (as index lists) of conjugation by <gens> on a stored class."""
    inv_gens = [(g, inverse(g)) for g in gens]
    seen = np.zeros(len(orbit), dtype=bool)
    parts = []
    for start in range(len(orbit)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        head = 0
        while head < len(comp):
            y = orbit.elements[comp[head]]
            head += 1
            for g, ginv in inv_gens:
                z = g[y[ginv]]
                j = orbit.index[perm.key(z)]
                if not seen[j]:
                    seen[j] = True
                    comp.append(j)
        parts.append(comp)
    return parts


def orbit_min_reps(gens, orbit: ClassOrbit) -> list[int]:
    """One index per orbit: the lexicographically minimal element."""
    reps = []
    for part in orbit_partition(gens, orbit):
        reps.append(min(part, key=lambda i: perm.key(orbit.elements[i])))
    reps.sort(key=lambda i: perm.key(orbit.elements[i]))
    return reps


def point_stabilizer_in_action(gens, group_order: int, orbit: ClassOrbit,
                               target_index: int) -> tuple[list[np.ndarray], int]:
    """Stabilizer of orbit.elements[target_index] inside the group <gens>
    acting on the class by conjugation.  Returns (gens, order)."""
    y0 = orbit.elements[target_index]
    degree = len(y0)
    inv_gens = [(g, inverse(g)) for g in gens]
    sub_elems = [target_index]
    sub_trans = {target_index: identity(degree)}
    head = 0
    while head < len(sub_elems):
        i = sub_elems[head]
        head += 1
        y = orbit.elements[i]
        u = sub_trans[i]
        for g, ginv in inv_gens:
            z = g[y[ginv]]
            j = orbit.index[perm.key(z)]
            if j not in sub_trans:
                sub_trans[j] = compose(u, g)
                sub_elems.append(j)
    stab_order, rem = divmod(group_order, len(sub_elems))
    assert rem == 0
    if stab_order == 1:
        return [], 1
    chain = StabChain(degree)
    kept: list[np.ndarray] = []
    for i in sub_elems:
        u = sub_trans[i]
        y = orbit.elements[i]
        for g, ginv in inv_gens:
            z = g[y[ginv]]
            j = orbit.index[perm.key(z)]
            s = compose(compose(u, g), inverse(sub_trans[j]))
            if is_identity(s):
                continue
            if chain.extend(s):
                kept.append(s)
                if chain.order() >= stab_order:
                    return kept, stab_order
    if chain.order() != stab_order:
        raise RuntimeError("stabilizer generation fell short")
    return kept, stab_order


def diagonal_orbit_reps(C: PermutationGroup, orbit: ClassOrbit,
                        arity: int) -> list[tuple[np.ndarray, ...]]:
    """Representatives of the diagonal conjugation action of C on tuples of
    class elements: one tuple per orbit.  Arity 1 gives orbit reps on the
    class; arity k extends each (k-1)-rep by reps of the joint stabilizer."""
    idx_tuples = diagonal_orbit_rep_indices(C.generators, C.order(), orbit, arity)
    return [tuple(orbit.elements[i] for i in t) for t in idx_tuples]


def diagonal_orbit_rep_indices(gens, group_order: int, orbit: ClassOrbit,
                               arity: int) -> list[tuple[int, ...]]:
    if arity < 1:
        raise ValueError("arity must be >= 1")
    reps = [(i,) for i in orbit_min_reps(gens, orbit)]
    cache: dict[tuple[int, ...], tuple[list, int]] = {(): (list(gens), group_order)}

    def joint_stabilizer(prefix: tuple[int, ...]):
        if prefix in cache:
            return cache[prefix]
        sub_gens, sub_order = joint_stabilizer(prefix[:-1])
        result = point_stabilizer_in_action(sub_gens, sub_order, orbit,
                                            prefix[-1])
        cache[prefix] = result
        return result

    for _ in range(arity - 1):
        nxt = []
        for t in reps:
            sub_gens, _ = joint_stabilizer(t)
            for j in orbit_min_reps(sub_gens, orbit):
                nxt.append(t + (j,))
        reps = nxt
    return reps


# ---------------------------------------------------------------------------
# Generator words
#
# word   := factor+
# factor := atom ('^' int)?
# atom   := generator letter | '(' word ')'
# Juxtaposition is the left-to-right product under the right action.


def evaluate_word(G: PermutationGroup, word: str) -> np.ndarray:
    text = word.replace(" ", "")
    if not text:
        raise WordError("empty word")
    value, pos = _parse_word(G, text, 0)
    if pos != len(text):
        raise WordError(f"unexpected {text[pos]!r} at position {pos} in {word!r}")
    return value


def _parse_word(G, text, pos, stop=")"):
    result = identity(G.degree)
    parsed_any = False
    while pos < len(text) and text[pos] != stop:
        atom, pos = _parse_atom(G, text, pos)
        if pos < len(text) and text[pos] == "^":
            pos += 1
            k, pos = _parse_int(text, pos)
            atom = perm.power(atom, k)
        result = compose(result, atom)
        parsed_any = True
    if not parsed_any:
        raise WordError(f"empty subword at position {pos} in {text!r}")
    return result, pos


def _parse_atom(G, text, pos):
    ch = text[pos]
    if ch == "(":
        value, pos = _parse_word(G, text, pos + 1)
        if pos >= len(text) or text[pos] != ")":
            raise WordError(f"unbalanced parenthesis in {text!r}")
        return value, pos + 1
    if ch.isalpha():
        return G.named_generator(ch), pos + 1
    raise WordError(f"unexpected {ch!r} at position {pos} in {text!r}")


def _parse_int(text, pos):
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start or text[start:pos] == "-":
        raise WordError(f"expected exponent at position {start} in {text!r}")
    return int(text[start:pos]), pos


# ---------------------------------------------------------------------------
# Group files


def load_group(path) -> PermutationGroup:
    with open(path) as fh:
        doc = json.load(fh)
    meta = doc.get("metadata", {})
    return PermutationGroup(
        degree=doc["degree"],
        generators=doc["generators"],
        names=doc.get("generator_names"),
        expected_order=meta.get("expected_order"),
        name=doc.get("name", ""),
    )


def save_group(G: PermutationGroup, path, extra_metadata=None) -> None:
    doc = {
        "name": G.name,
        "degree": G.degree,
        "generators": [list(map(int, g)) for g in G.generators],
        "generator_names": G.generator_names,
        "metadata": {"expected_order": G.order(), **(extra_metadata or {})},
    }
    with open(path, "w") as fh:
        json.dump(doc, fh)
        fh.write("\n")
