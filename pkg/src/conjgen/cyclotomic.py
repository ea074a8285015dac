"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored in the power basis {1, z, ..., z^(phi(n)-1)} of Q(zeta_n),
i.e. coefficient vectors reduced modulo the n-th cyclotomic polynomial.  Two
values over the same conductor are equal iff their coefficient maps agree;
across conductors both operands are lifted to the lcm (the conductor is never
minimized automatically).

Rational coefficients are `fractions.Fraction`, so everything is arbitrary
precision.  Values are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

__all__ = ["Cyclotomic", "Rational", "NotRational", "CycParseError", "E", "parse"]

# Coefficients of character values; arbitrary-precision rational.
Rational = Fraction


class NotRational(ValueError):
    """Raised when a cyclotomic with irrational part is coerced to Rational."""


class CycParseError(ValueError):
    """Raised on malformed cyclotomic literals."""


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, ascending degree, computed by dividing x^n - 1
    by Phi_d for every proper divisor d of n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    # x^n - 1
    num = [Fraction(0)] * (n + 1)
    num[0] = Fraction(-1)
    num[n] = Fraction(1)
    for d in range(1, n):
        if n % d == 0:
            num = _poly_div_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _poly_div_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    # Exact division of polynomials (ascending coefficients), remainder must
    # be zero.
    num = list(num)
    dd = len(den) - 1
    lead = den[dd]
    out = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _reduce(n: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Reduce a zeta_n-polynomial to the power basis: exponents mod n, then
    polynomial remainder modulo Phi_n."""
    if n == 1:
        total = sum(coeffs.values(), Fraction(0))
        return {0: total} if total else {}
    dense = [Fraction(0)] * n
    for e, c in coeffs.items():
        dense[e % n] += c
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    for i in range(n - 1, deg - 1, -1):
        c = dense[i]
        if c:
            dense[i] = Fraction(0)
            for j in range(deg):
                dense[i - deg + j] -= c * phi[j]
    return {e: c for e, c in enumerate(dense[:deg]) if c}


class Cyclotomic:
    """An exact element of Q(zeta_n) in canonical (power basis) form."""

    __slots__ = ("n", "coeffs")

    def __init__(self, conductor: int, coeffs: dict[int, Fraction] | None = None,
                 _reduced: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        object.__setattr__(self, "n", conductor)
        raw = {e: Fraction(c) for e, c in (coeffs or {}).items() if c}
        if not _reduced:
            raw = _reduce(conductor, raw)
        object.__setattr__(self, "coeffs", raw)

    def __setattr__(self, *a):
        raise AttributeError("Cyclotomic values are immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_rational(q) -> "Cyclotomic":
        q = Fraction(q)
        return Cyclotomic(1, {0: q} if q else {}, _reduced=True)

    @staticmethod
    def root_of_unity(n: int, k: int = 1) -> "Cyclotomic":
        """zeta_n^k."""
        if n < 1:
            raise ValueError("E(n) needs n >= 1")
        return Cyclotomic(n, {k % n: Fraction(1)})

    # -- structure --------------------------------------------------------

    def lifted(self, m: int) -> "Cyclotomic":
        """The same value viewed in Q(zeta_m); m must be a multiple of n."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only lift to a multiple of the conductor")
        f = m // self.n
        return Cyclotomic(m, {e * f: c for e, c in self.coeffs.items()})

    def is_rational(self) -> bool:
        return all(e == 0 for e in self.coeffs)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self} has nonzero irrational part")
        return self.coeffs.get(0, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational_integer(self) -> bool:
        return self.is_rational() and self.coeffs.get(0, Fraction(0)).denominator == 1

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(v) -> "Cyclotomic":
        if isinstance(v, Cyclotomic):
            return v
        if isinstance(v, (int, Fraction)):
            return Cyclotomic.from_rational(v)
        return NotImplemented

    def __add__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = lcm(self.n, other.n)
        a, b = self.lifted(m), other.lifted(m)
        out = dict(a.coeffs)
        for e, c in b.coeffs.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Cyclotomic(m, out, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.n, {e: -c for e, c in self.coeffs.items()},
                          _reduced=True)

    def __sub__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Cyclotomic._coerce(other) + (-self)

    def __mul__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = lcm(self.n, other.n)
        a, b = self.lifted(m), other.lifted(m)
        out: dict[int, Fraction] = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a rational scalar only (general inverses are a non-goal)."""
        if isinstance(other, Cyclotomic):
            other = other.to_rational()
        q = Fraction(other)
        if not q:
            raise ZeroDivisionError("division of cyclotomic by zero")
        return Cyclotomic(self.n, {e: c / q for e, c in self.coeffs.items()},
                          _reduced=True)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- Galois action ------------------------------------------------------

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta_n -> zeta_n^k; k must be coprime to n."""
        if gcd(k, self.n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {self.n}")
        return Cyclotomic(self.n, {(e * k) % self.n: c
                                   for e, c in self.coeffs.items()})

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, zeta_n -> zeta_n^(-1)."""
        return self.galois(self.n - 1 if self.n > 1 else 1)

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        other = Cyclotomic._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        m = lcm(self.n, other.n)
        return self.lifted(m).coeffs == other.lifted(m).coeffs

    # Equal values may carry different conductors, so no cheap consistent hash.
    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Cyclotomic({self.to_string()!r})"

    def to_string(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(c)
            else:
                root = f"E({self.n})" if e == 1 else f"E({self.n})^{e}"
                if c == 1:
                    term = root
                elif c == -1:
                    term = f"-{root}"
                else:
                    term = f"{c}*{root}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f"+{term}" if not term.startswith("-") else term
        return out

    __str__ = to_string


def E(n: int, k: int = 1) -> Cyclotomic:
    """Primitive n-th root of unity raised to the k-th power."""
    return Cyclotomic.root_of_unity(n, k)


# -- parser ------------------------------------------------------------------
#
# expr := term (('+'|'-') term)*
# term := rat | rat '*' root | root
# root := 'E(' int ')' ('^' int)?
# rat  := int ('/' posint)?

class _Scanner:
    def __init__(self, text: str):
        self.text = text.replace(" ", "").replace("\t", "")
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise CycParseError(
                f"expected {ch!r} at position {self.pos} in {self.text!r}")
        self.pos += 1

    def integer(self) -> int:
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.peek().isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise CycParseError(
                f"expected integer at position {start} in {self.text!r}")
        return int(self.text[start:self.pos])


def parse(text: str) -> Cyclotomic:
    """Parse a cyclotomic literal such as ``-3/2*E(7)^2+E(4)``."""
    sc = _Scanner(text)
    if not sc.text:
        raise CycParseError("empty cyclotomic literal")
    value = Cyclotomic.from_rational(0)
    sign = 1
    if sc.peek() == "+":
        sc.take("+")
    elif sc.peek() == "-":
        sc.take("-")
        sign = -1
    while True:
        value = value + _parse_term(sc) * sign
        if sc.peek() == "+":
            sc.take("+")
            sign = 1
        elif sc.peek() == "-":
            sc.take("-")
            sign = -1
        elif not sc.peek():
            return value
        else:
            raise CycParseError(
                f"unexpected {sc.peek()!r} at position {sc.pos} in {sc.text!r}")


def _parse_term(sc: _Scanner) -> Cyclotomic:
    if sc.peek() == "E":
        return _parse_root(sc)
    num = sc.integer()
    den = 1
    if sc.peek() == "/":
        sc.take("/")
        den = sc.integer()
        if den <= 0:
            raise CycParseError("denominator must be positive")
    coeff = Fraction(num, den)
    if sc.peek() == "*":
        sc.take("*")
        return _parse_root(sc) * coeff
    return Cyclotomic.from_rational(coeff)


def _parse_root(sc: _Scanner) -> Cyclotomic:
    sc.take("E")
    sc.take("(")
    n = sc.integer()
    sc.take(")")
    if n < 1:
        raise CycParseError(f"E({n}) is invalid; the order must be positive")
    k = 1
    if sc.peek() == "^":
        sc.take("^")
        k = sc.integer()
    return Cyclotomic.root_of_unity(n, k)
