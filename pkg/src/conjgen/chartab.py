"""Character table data model: loading, exact validation, power-map queries.

Tables are read from JSON files and checked against the full set of
orthogonality and counting invariants in exact cyclotomic arithmetic.
A table may also be a bare "class frame" (no irreducibles); frames carry
class data and power maps only and skip the character-level checks, which
is what externally supplied class functions need as a backing skeleton.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math

from .cyclotomic import Cyclotomic, parse as parse_cyc


class TableError(Exception):
    """Malformed or inconsistent character table data."""


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ClassInfo:
    label: str
    element_order: int
    centralizer_order: int


class CharacterTable:
    """Immutable conjugacy-class frame plus (optionally) the irreducibles."""

    def __init__(self, name, group_order, classes, power_maps, irreducibles,
                 metadata=None):
        self.name = name
        self.group_order = int(group_order)
        self.classes = list(classes)
        self.power_maps = {int(p): tuple(m) for p, m in power_maps.items()}
        self.irreducibles = irreducibles  # list of rows of Cyclotomic, or None
        self.metadata = dict(metadata or {})
        self._label_index = {c.label: i for i, c in enumerate(self.classes)}
        self._validate()

    # -- basic queries -------------------------------------------------------
    @property
    def n_classes(self):
        return len(self.classes)

    def class_size(self, k):
        return self.group_order // self.classes[k].centralizer_order

    def index_of(self, label):
        try:
            return self._label_index[label]
        except KeyError:
            raise TableError(f"table {self.name!r} has no class {label!r}")

    @property
    def is_frame(self):
        return not self.irreducibles

    # -- power maps ----------------------------------------------------------
    def power_class(self, k, exponent):
        """Class of x^exponent for x in class k."""
        if exponent < 0:
            raise TableError("exponent must be >= 0")
        o = self.classes[k].element_order
        exponent %= o
        if exponent == 0:
            return 0
        cur = k
        for p, mult in _factorize(exponent):
            pm = self.power_maps.get(p)
            if pm is None:
                raise TableError(
                    f"table {self.name!r} lacks the power map for prime {p}")
            for _ in range(mult):
                cur = pm[cur]
        return cur

    def inverse_class(self, k):
        return self.power_class(k, self.classes[k].element_order - 1)

    def classes_with_order_divisible_by(self, r):
        if not is_prime(r):
            raise TableError(f"{r} is not prime")
        return [k for k, c in enumerate(self.classes)
                if c.element_order % r == 0]

    # -- validation ----------------------------------------------------------
    def _validate(self):
        n = self.n_classes
        if n == 0:
            raise TableError("table has no classes")
        if self.classes[0].element_order != 1:
            raise TableError("class 0 must be the identity class")
        if self.classes[0].centralizer_order != self.group_order:
            raise TableError("identity class has wrong centralizer order")
        for c in self.classes:
            if self.group_order % c.centralizer_order:
                raise TableError(
                    f"centralizer order {c.centralizer_order} of {c.label} "
                    f"does not divide the group order")
        max_order = max(c.element_order for c in self.classes)
        for p in range(2, max_order + 1):
            if is_prime(p) and p not in self.power_maps:
                raise TableError(f"missing power map for prime {p}")
        for p, pm in self.power_maps.items():
            if len(pm) != n:
                raise TableError(f"power map for {p} has wrong length")
            for k, img in enumerate(pm):
                o = self.classes[k].element_order
                expect = o // math.gcd(o, p)
                if self.classes[img].element_order != expect:
                    raise TableError(
                        f"power map {p} sends {self.classes[k].label} "
                        f"(order {o}) to {self.classes[img].label} "
                        f"(order {self.classes[img].element_order}), "
                        f"expected order {expect}")
        if self.is_frame:
            return

        if sum(self.class_size(k) for k in range(n)) != self.group_order:
            raise TableError("class sizes do not sum to the group order")
        rows = self.irreducibles
        if len(rows) != n or any(len(r) != n for r in rows):
            raise TableError("irreducibles must form a square matrix")
        degsq = 0
        for i, row in enumerate(rows):
            d = row[0]
            if not d.is_rational():
                raise TableError(f"character {i} has irrational degree")
            d = d.to_rational()
            if d.denominator != 1 or d <= 0:
                raise TableError(f"character {i} has degree {d}")
            degsq += d.numerator * d.numerator
        if degsq != self.group_order:
            raise TableError("sum of squared degrees != group order")
        # row orthogonality
        sizes = [self.class_size(k) for k in range(n)]
        for i in range(n):
            for j in range(i, n):
                s = Cyclotomic.from_rational(0)
                for k in range(n):
                    s = s + rows[i][k] * rows[j][k].conj() * sizes[k]
                want = self.group_order if i == j else 0
                if s != Cyclotomic.from_rational(want):
                    raise TableError(
                        f"row orthogonality fails for characters {i}, {j}")
        # column orthogonality
        for g in range(n):
            for h in range(g, n):
                s = Cyclotomic.from_rational(0)
                for i in range(n):
                    s = s + rows[i][g] * rows[i][h].conj()
                want = self.classes[g].centralizer_order if g == h else 0
                if s != Cyclotomic.from_rational(want):
                    raise TableError(
                        f"column orthogonality fails for classes "
                        f"{self.classes[g].label}, {self.classes[h].label}")
        # conjugate symmetry across inverse classes
        for k in range(n):
            ki = self.inverse_class(k)
            for i in range(n):
                if rows[i][ki] != rows[i][k].conj():
                    raise TableError(
                        f"character {i} not conjugate-symmetric between "
                        f"{self.classes[k].label} and its inverse class")


def _factorize(m):
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


# -- class functions ---------------------------------------------------------
@dataclass
class ClassFunction:
    """Values of a class function on (a subset of) the classes of a table.

    Entries may be None for classes the data source did not provide; any
    computation touching such a class fails loudly.  An optional field
    characteristic marks functions that are only meaningful on classes of
    order coprime to it.
    """
    table: CharacterTable
    values: list            # Cyclotomic or None, aligned to table classes
    dim: int
    characteristic: int | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.values) != self.table.n_classes:
            raise TableError("class function length != number of classes")
        v0 = self.values[0]
        if v0 is None or v0 != Cyclotomic.from_rational(self.dim):
            raise TableError("value at the identity class must equal dim")

    def value(self, k):
        v = self.values[k]
        if v is None:
            raise TableError(
                f"class function has no value on class "
                f"{self.table.classes[k].label}")
        return v


# -- file I/O -----------------------------------------------------------------
def _parse_value(s):
    if s is None:
        return None
    if isinstance(s, int):
        return Cyclotomic.from_rational(s)
    return parse_cyc(s)


def load_table(path):
    with open(path) as fh:
        doc = json.load(fh)
    try:
        classes = [ClassInfo(c["label"], int(c["element_order"]),
                             int(c["centralizer_order"]))
                   for c in doc["classes"]]
        irr = doc.get("irreducibles") or None
        if irr is not None:
            irr = [[_parse_value(v) for v in row] for row in irr]
        return CharacterTable(
            name=doc["name"],
            group_order=doc["group_order"],
            classes=classes,
            power_maps=doc["power_maps"],
            irreducibles=irr,
            metadata=doc.get("metadata"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise TableError(f"malformed table file {path}: {exc}") from exc


def save_table(table, path):
    doc = {
        "name": table.name,
        "group_order": table.group_order,
        "classes": [
            {"label": c.label, "element_order": c.element_order,
             "centralizer_order": c.centralizer_order}
            for c in table.classes
        ],
        "power_maps": {str(p): list(m)
                       for p, m in sorted(table.power_maps.items())},
        "irreducibles": None if table.is_frame else [
            [v.to_string() for v in row] for row in table.irreducibles
        ],
        "metadata": table.metadata,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_class_function(path, table):
    with open(path) as fh:
        doc = json.load(fh)
    if doc.get("table") and doc["table"] != table.name:
        raise TableError(
            f"class function targets table {doc['table']!r}, got "
            f"{table.name!r}")
    return ClassFunction(
        table=table,
        values=[_parse_value(v) for v in doc["values"]],
        dim=int(doc["dim"]),
        characteristic=doc.get("characteristic"),
        metadata=doc.get("metadata", {}),
    )


# -- matching group classes to table classes ----------------------------------
def match_classes(group, table):
    """Match conjugacy_classes() output to table classes by invariants.

    Returns (mapping, ambiguous) where mapping[i] is the table index matched
    to group class i and ambiguous is a list of index groups that could not
    be separated by (element order, centralizer order); within such a group
    the assignment is arbitrary but consistent.
    """
    gcls = group.conjugacy_classes()
    if len(gcls) != table.n_classes:
        raise TableError(
            f"group has {len(gcls)} classes, table {table.name!r} has "
            f"{table.n_classes}")
    by_inv = {}
    for j, c in enumerate(table.classes):
        by_inv.setdefault((c.element_order, c.centralizer_order), []).append(j)
    mapping = [None] * len(gcls)
    ambiguous = []
    taken = set()
    for i, gc in enumerate(gcls):
        key = (gc.element_order, gc.centralizer_order)
        cands = [j for j in by_inv.get(key, []) if j not in taken]
        if not cands:
            raise TableError(
                f"no table class matches group class with order "
                f"{key[0]} and centralizer {key[1]}")
        mapping[i] = cands[0]
        taken.add(cands[0])
        if len(by_inv[key]) > 1 and by_inv[key] not in ambiguous:
            ambiguous.append(by_inv[key])
    return mapping, ambiguous
