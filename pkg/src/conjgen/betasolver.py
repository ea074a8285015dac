"""Minimum numbers of conjugates generating prescribed subgroups.

For x in G with designated normal subgroup S such that G = <S, x>:

  alpha(x)   = least k with k conjugates of x generating a subgroup
               containing S;
  beta_r(x)  = least k with k conjugates of x generating a subgroup of
               order divisible by the prime r.

Both are found by brute-force search over tuples of class elements, with
the first tuple entry fixed to x (sound: conjugating a successful tuple so
its first entry becomes x preserves both success predicates) and the
remaining entries reduced to representatives of the diagonal conjugation
action of C_G(x).  beta_r(x) = 1 exactly when r divides the order of x.

beta_upper_char gives the character-theoretic upper bounds 2 and 3 from
class multiplication coefficients, without touching a permutation group.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import itertools
import multiprocessing

from . import perm
from .permgroup import (PermutationGroup, build_chain, orbit_min_reps,
                        point_stabilizer_in_action, CapExceeded,
                        DEFAULT_CLASS_CAP)
from .chartab import is_prime, TableError
from .structconst import m_coeff, n_coeff

EXHAUSTIVE_TUPLE_CAP = 10 ** 7


class BetaError(Exception):
    pass


@dataclass
class GroupPair:
    """G with a designated normal subgroup S = <S_generators> and an
    element x such that G = <S, x>.  Verified on construction."""
    G: PermutationGroup
    S_generators: list
    x: object

    def __post_init__(self):
        G = self.G
        if not G.is_member(self.x):
            raise BetaError("x is not an element of G")
        s_chain = build_chain(G.degree, self.S_generators)
        for s in self.S_generators:
            for g in G.generators:
                if not s_chain.contains(perm.conjugate(s, g)):
                    raise BetaError("S is not normal in G")
        if build_chain(G.degree,
                       list(self.S_generators) + [self.x]).order() != G.order():
            raise BetaError("<S, x> is not the whole of G")
        self.s_order = s_chain.order()


@dataclass
class BetaReport:
    kind: str               # "alpha" | "beta"
    r: int | None
    value: object           # int, or (lo, None) meaning "> lo"
    witnesses: list         # tuples of permutations achieving the value
    method: str
    trace: list = field(default_factory=list)

    @property
    def exact(self):
        return isinstance(self.value, int)


# -- lazy diagonal-orbit representative tuples --------------------------------
def _iter_rep_tuples(gens, group_order, orbit, arity):
    """Yield index tuples, one per orbit of the diagonal conjugation action
    of the group <gens> on arity-tuples of class elements, in a fixed
    deterministic (min-lex rep) order."""
    def rec(prefix, sub_gens, sub_order):
        reps = orbit_min_reps(sub_gens, orbit)
        if len(prefix) + 1 == arity:
            for j in reps:
                yield prefix + (j,)
            return
        for j in reps:
            nxt_gens, nxt_order = point_stabilizer_in_action(
                sub_gens, sub_order, orbit, j)
            yield from rec(prefix + (j,), nxt_gens, nxt_order)

    if arity < 1:
        raise ValueError("arity must be >= 1")
    yield from rec((), list(gens), group_order)


def _iter_exhaustive_tuples(orbit, arity):
    n = len(orbit)
    if n ** arity > EXHAUSTIVE_TUPLE_CAP:
        raise CapExceeded(f"{n}^{arity} tuples exceed the exhaustive cap")
    yield from itertools.product(range(n), repeat=arity)


# -- success predicates --------------------------------------------------------
def _beta_success(degree, x, tup_elems, r):
    return build_chain(degree, [x] + tup_elems).order() % r == 0


def _alpha_success(degree, x, tup_elems, s_generators):
    chain = build_chain(degree, [x] + tup_elems)
    return all(chain.contains(s) for s in s_generators)


_POOL_STATE = {}


def _pool_init(degree, x, s_generators, r, kind, elements):
    _POOL_STATE.update(degree=degree, x=x, s=s_generators, r=r, kind=kind,
                       elements=elements)


def _pool_test(chunk):
    st = _POOL_STATE
    for pos, tup in chunk:
        elems = [st["elements"][i] for i in tup]
        if st["kind"] == "beta":
            ok = _beta_success(st["degree"], st["x"], elems, st["r"])
        else:
            ok = _alpha_success(st["degree"], st["x"], elems, st["s"])
        if ok:
            return pos, tup
    return None


def _scan(tuples_iter, test_one, threads, pool_args, chunk_size=8):
    """First success in enumeration order; returns (count_scanned, tuple or
    None).  With threads > 1 the scan is chunked but the result (and hence
    the witness) is independent of the worker count."""
    if threads <= 1:
        count = 0
        for tup in tuples_iter:
            count += 1
            if test_one(tup):
                return count, tup
        return count, None

    indexed = ((i, t) for i, t in enumerate(tuples_iter))
    count = 0
    ctx = multiprocessing.get_context("fork")
    with ProcessPoolExecutor(max_workers=threads, mp_context=ctx,
                             initializer=_pool_init,
                             initargs=pool_args) as pool:
        pending = []
        done = False
        best = None
        while not done or pending:
            while not done and len(pending) < 2 * threads:
                chunk = list(itertools.islice(indexed, chunk_size))
                if not chunk:
                    done = True
                    break
                count += len(chunk)
                pending.append(pool.submit(_pool_test, chunk))
            if not pending:
                break
            fut = pending.pop(0)
            hit = fut.result()
            if hit is not None:
                best = hit[1]
                for f in pending:
                    f.cancel()
                pending.clear()
                break
    return count, best


def _search(pair, kind, r, k_max, threads, reduction, class_cap):
    G = pair.G
    x = pair.x
    degree = G.degree
    trace = []
    x_order = perm.order(x)

    # k = 1
    if kind == "beta":
        ok1 = x_order % r == 0
    else:
        cx = build_chain(degree, [x])
        ok1 = all(cx.contains(s) for s in pair.S_generators)
    trace.append({"k": 1, "tuples_tested": 1, "success": ok1})
    if ok1:
        return BetaReport(kind=kind, r=r, value=1, witnesses=[(x,)],
                          method="bruteforce", trace=trace)
    if k_max < 2:
        return BetaReport(kind=kind, r=r, value=(k_max, None), witnesses=[],
                          method="bruteforce", trace=trace)

    orbit = G.class_orbit(x, cap=class_cap)
    elements = orbit.elements
    if reduction:
        C = G.centralizer(x, cap=class_cap)
        c_gens, c_order = C.generators, C.order()

    def test_one(tup):
        elems = [elements[i] for i in tup]
        if kind == "beta":
            return _beta_success(degree, x, elems, r)
        return _alpha_success(degree, x, elems, pair.S_generators)

    pool_args = (degree, x, pair.S_generators, r, kind, elements)

    for k in range(2, k_max + 1):
        if reduction:
            tuples_iter = _iter_rep_tuples(c_gens, c_order, orbit, k - 1)
        else:
            tuples_iter = _iter_exhaustive_tuples(orbit, k - 1)
        tested, hit = _scan(tuples_iter, test_one, threads, pool_args)
        trace.append({"k": k, "tuples_tested": tested,
                      "success": hit is not None})
        if hit is not None:
            witness = (x,) + tuple(elements[i] for i in hit)
            return BetaReport(kind=kind, r=r, value=k, witnesses=[witness],
                              method="bruteforce", trace=trace)
    return BetaReport(kind=kind, r=r, value=(k_max, None), witnesses=[],
                      method="bruteforce", trace=trace)


def beta_exact(pair, r, k_max=4, threads=1, reduction=True,
               class_cap=DEFAULT_CLASS_CAP):
    if not is_prime(r):
        raise BetaError(f"{r} is not prime")
    report = _search(pair, "beta", r, k_max, threads, reduction, class_cap)
    # invariant asserted on every report: value 1 iff r divides |x|
    if report.exact:
        assert (report.value == 1) == (perm.order(pair.x) % r == 0)
    return report


def alpha_exact(pair, k_max=4, threads=1, reduction=True,
                class_cap=DEFAULT_CLASS_CAP):
    return _search(pair, "alpha", None, k_max, threads, reduction, class_cap)


def verify_report(pair, report):
    """Re-verify every witness independently of the search path."""
    G = pair.G
    for witness in report.witnesses:
        for w in witness:
            if G.is_conjugate(pair.x, w) is None:
                return False
        order = build_chain(G.degree, list(witness)).order()
        if report.kind == "beta":
            if order % report.r != 0:
                return False
        else:
            chain = build_chain(G.degree, list(witness))
            if not all(chain.contains(s) for s in pair.S_generators):
                return False
        if report.exact and len(witness) != report.value:
            return False
    return True


def beta_upper_char(table, class_index, r):
    """Character-theoretic upper bound for beta_r on the given class:
    2 if a class of order divisible by r is a product of two class
    elements, 3 if it is a product of three, else None (inconclusive)."""
    if not is_prime(r):
        raise TableError(f"{r} is not prime")
    divisible = table.classes_with_order_divisible_by(r)
    for d in divisible:
        if m_coeff(table, [class_index, class_index], d) > 0:
            return 2
    for d in divisible:
        # n(C,C,C,D) > 0 gives a triple of C-elements whose product lies in
        # the inverse class of D, whose order is likewise divisible by r
        if n_coeff(table, [class_index, class_index, class_index, d]) > 0:
            return 3
    return None
