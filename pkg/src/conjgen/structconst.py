"""Exact class multiplication coefficients from a character table.

m(C1,...,Cn) counts (n-1)-tuples (u1,...,u_{n-1}) with u_i in C_i whose
product is a fixed element of C_n; n(C1,...,Cn) counts n-tuples with
product 1.  Both are computed entirely in exact cyclotomic arithmetic and
must reduce to nonnegative rational integers; anything else signals corrupt
table data.  A literal enumeration oracle over small permutation groups is
provided for cross-checking.
"""

from fractions import Fraction

from .cyclotomic import Cyclotomic, NotRational
from . import perm
from .chartab import TableError

TRIPLE_CAP = 10 ** 5
QUADRUPLE_CAP = 10 ** 4


class NonIntegerResult(Exception):
    """A coefficient failed to reduce to a nonnegative rational integer."""


def _character_sum(table, factor_classes, conj_target):
    """Sum over irreducibles of prod(chi(x_i)) [ * conj(chi(x_n)) ] / deg^(n-2).

    conj_target is the class index whose value enters conjugated, or None
    for the plain n-style sum over all of factor_classes.
    """
    if table.is_frame:
        raise TableError(
            f"table {table.name!r} has no irreducibles; coefficients "
            f"cannot be computed from a bare class frame")
    n_factors = len(factor_classes) + (1 if conj_target is not None else 0)
    total = Cyclotomic.from_rational(0)
    for row in table.irreducibles:
        deg = row[0].to_rational()
        term = Cyclotomic.from_rational(1)
        for k in factor_classes:
            term = term * row[k]
        if conj_target is not None:
            term = term * row[conj_target].conj()
        total = total + term / deg ** (n_factors - 2)
    return total


def _as_count(value, scale):
    value = value * scale
    try:
        q = value.to_rational()
    except NotRational as exc:
        raise NonIntegerResult(f"coefficient is irrational: {value}") from exc
    if q.denominator != 1 or q < 0:
        raise NonIntegerResult(f"coefficient is not a nonnegative "
                               f"integer: {q}")
    return int(q)


def m_coeff(table, factor_classes, target):
    """Number of tuples from factor_classes multiplying to a fixed element
    of the target class."""
    if len(factor_classes) < 2:
        raise TableError("m-coefficient needs at least two factor classes")
    scale = Fraction(1, table.group_order)
    for k in factor_classes:
        scale *= table.class_size(k)
    return _as_count(_character_sum(table, list(factor_classes), target),
                     scale)


def n_coeff(table, classes):
    """Number of tuples, one element per class, with product 1."""
    if len(classes) < 3:
        raise TableError("n-coefficient needs at least three classes")
    scale = Fraction(1, table.group_order)
    for k in classes:
        scale *= table.class_size(k)
    return _as_count(_character_sum(table, list(classes), None), scale)


def check_relation(table, factor_classes, target):
    """|C_n| * m(C_1,..,C_n) equals n(C_1,..,C_{n-1}, inverse of C_n)."""
    lhs = table.class_size(target) * m_coeff(table, factor_classes, target)
    rhs = n_coeff(table, list(factor_classes) + [table.inverse_class(target)])
    return lhs == rhs


def dimazal_excludes(table, factor_classes, target):
    """True iff no tuple from these classes with the stated product can
    generate the whole group (valid only for centreless groups; the flag
    is caller-supplied table metadata, not verified here)."""
    if not table.metadata.get("centreless"):
        raise TableError(
            f"table {table.name!r} is not marked centreless; the "
            f"non-generation criterion does not apply")
    cent = table.classes[target].centralizer_order
    return m_coeff(table, factor_classes, target) < cent


def brute_count(group, class_reps, target_rep, mode):
    """Literal enumeration oracle.

    mode "m": tuples (u_1,..,u_k) with u_i conjugate to class_reps[i] and
    product equal to target_rep exactly.
    mode "n": tuples (u_1,..,u_k, v) with v conjugate to target_rep and
    total product the identity.
    """
    if mode not in ("m", "n"):
        raise ValueError(f"mode must be 'm' or 'n', got {mode!r}")
    n_factors = len(class_reps) + 1
    cap = TRIPLE_CAP if n_factors <= 3 else QUADRUPLE_CAP
    if group.order() > cap:
        raise TableError(
            f"group order {group.order()} exceeds the enumeration cap {cap}")
    orbits = [group.class_orbit(r).elements for r in class_reps]
    if mode == "m":
        target_test = perm.key(target_rep)
        targets = None
    else:
        targets = {perm.key(perm.inverse(v))
                   for v in group.class_orbit(target_rep).elements}

    count = 0

    def recurse(depth, prod):
        nonlocal count
        if depth == len(orbits):
            k = perm.key(prod)
            if mode == "m":
                if k == target_test:
                    count += 1
            else:
                if k in targets:
                    count += 1
            return
        for u in orbits[depth]:
            recurse(depth + 1, perm.compose(prod, u))

    recurse(0, perm.identity(group.degree))
    return count
