"""Exact univariate polynomials in the residue-field size ``q``.

Every count, degree, order and index in the engine is a :class:`RatPoly`.
Coefficients are :class:`fractions.Fraction`, so class-count polynomials such
as ``q(q-1)(q-2)(q-3)/24`` are represented exactly; integrality is a property
checked by evaluation, never by coefficient type.

>>> q = RatPoly.q()
>>> (q - 1) * (q + 1)
RatPoly('q^2 - 1')
>>> div_exact(q**4 - 1, q**2 + 1)
RatPoly('q^2 - 1')
>>> ennola_transform(q**2 + q + 1)
RatPoly('q^2 - q + 1')
"""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

from .errors import NotDivisible, ZeroPolynomial

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class RatPoly:
    """Immutable polynomial in ``q`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; the tuple is normalized so
    its last entry is nonzero, and the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = hash(self.coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def q(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "RatPoly":
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x) -> "RatPoly":
        if isinstance(x, RatPoly):
            return x
        return cls((x,))

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        """Canonical total order: by degree, then coefficients from the top down."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other: "RatPoly") -> bool:
        return self.sort_key() < other.sort_key()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "RatPoly":
        other = RatPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __pos__(self) -> "RatPoly":
        return self

    def __sub__(self, other) -> "RatPoly":
        return self + (-RatPoly.coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return RatPoly.coerce(other) - self

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return RatPoly(c * other for c in self.coeffs)
        other = RatPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatPoly":
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of RatPoly by zero")
            return RatPoly(c / other for c in self.coeffs)
        return div_exact(self, other)

    def __pow__(self, k: int) -> "RatPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("RatPoly powers must be nonnegative integers")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        other = RatPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quot), RatPoly(rem[:db] if db > 0 else ())

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation at an exact rational or composition with a RatPoly."""
        if isinstance(x, RatPoly):
            acc = ZERO
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def subs_power(self, d: int) -> "RatPoly":
        """Substitute ``q -> q**d``."""
        if d == 1:
            return self
        out = [Fraction(0)] * (d * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[d * i] = c
        return RatPoly(out)

    # -- text / json --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "q" if i == 1 else f"q^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"RatPoly('{self}')"

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RatPoly":
        return cls(Fraction(s) for s in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


ZERO = RatPoly()
ONE = RatPoly((1,))
Q = RatPoly.q()


def add(a: RatPoly, b: RatPoly) -> RatPoly:
    return a + b


def mul(a: RatPoly, b: RatPoly) -> RatPoly:
    return a * b


def div_exact(a: RatPoly, b: RatPoly, context: str = "") -> RatPoly:
    """Return ``c`` with ``b * c == a``; raise :class:`NotDivisible` otherwise."""
    a, b = RatPoly.coerce(a), RatPoly.coerce(b)
    quot, rem = divmod(a, b)
    if rem:
        raise NotDivisible(a, b, rem, context)
    return quot


def evaluate(a: RatPoly, x) -> Fraction:
    return a(x)


def ennola_transform(g: RatPoly) -> RatPoly:
    """``(-1)**deg(g) * g(-q)``; an involution preserving the leading sign."""
    if g.is_zero():
        raise ZeroPolynomial("ennola_transform of the zero polynomial")
    d = g.degree
    return RatPoly(c if (d - i) % 2 == 0 else -c for i, c in enumerate(g.coeffs))


def strip_q_power(g: RatPoly) -> tuple[int, RatPoly]:
    """Split ``g = q**e * core`` with ``core(0) != 0``."""
    if g.is_zero():
        raise ZeroPolynomial("strip_q_power of the zero polynomial")
    e = 0
    while g.coeffs[e] == 0:
        e += 1
    return e, RatPoly(g.coeffs[e:])


def prod(factors: Iterable[RatPoly]) -> RatPoly:
    acc = ONE
    for f in factors:
        acc = acc * f
    return acc
