"""Symbolic catalogue of the finite groups that occur as centralizers.

Each :class:`GroupSpec` knows its order polynomial and its representation
zeta series.  The character-degree data of ``G^eps_n(F_q)`` for ``n <= 4`` is
transcribed row by row from reference tables; ``eps`` is instantiated
before any arithmetic, so the rows are plain functions of ``(q, eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import UnsupportedSpec
from .polyq import ONE, Q, RatPoly, prod
from .zeta_core import ZetaSeries, check_sign, merge, product, scale_degrees, scale_multiplicities

H = Fraction(1, 2)

Row = tuple[Callable[[RatPoly, int], RatPoly], Callable[[RatPoly, int], RatPoly]]

# Representations of G^e_2(F_q): (number of irreducibles, degree)
TABLE_N2: list[Row] = [
    (lambda q, e: q - e, lambda q, e: ONE),
    (lambda q, e: q - e, lambda q, e: q),
    (lambda q, e: H * (q - e - 1) * (q - e), lambda q, e: q + e),
    (lambda q, e: H * (q + e - 1) * (q - e), lambda q, e: q - e),
]

# Representations of G^e_3(F_q)
TABLE_N3: list[Row] = [
    (lambda q, e: q - e, lambda q, e: ONE),
    (lambda q, e: q - e, lambda q, e: q * (q + e)),
    (lambda q, e: q - e, lambda q, e: q**3),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: q**2 + e * q + 1),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: q * (q**2 + e * q + 1)),
    (lambda q, e: Fraction(1, 6) * (q - e - 2) * (q - e - 1) * (q - e), lambda q, e: (q + e) * (q**2 + e * q + 1)),
    (lambda q, e: H * (q + e - 1) * (q - e) ** 2, lambda q, e: q**3 - e),
    (lambda q, e: Fraction(1, 3) * q * (q**2 - 1), lambda q, e: (q**2 - 1) * (q - e)),
]


def _c(q, e):
    return q**2 + e * q + 1


# Representations of G^e_4(F_q), 22 rows.  Rows 6 and 8 carry the degree
# factor q^2 + 1; TABLE_N4_PRINTED keeps the q^3 + e variant, which fails the
# sum-of-squares identity (see ``FIELD_TABLE_ERRATA``).
TABLE_N4: list[Row] = [
    (lambda q, e: q - e, lambda q, e: ONE),
    (lambda q, e: q - e, lambda q, e: q * _c(q, e)),
    (lambda q, e: q - e, lambda q, e: q**2 * (q**2 + 1)),
    (lambda q, e: q - e, lambda q, e: q**3 * _c(q, e)),
    (lambda q, e: q - e, lambda q, e: q**6),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: (q + e) * (q**2 + 1)),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: q * (q**2 + 1) * (q + e) ** 2),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: q**3 * (q**2 + 1) * (q + e)),
    (lambda q, e: H * (q - e - 1) * (q - e), lambda q, e: (q**2 + 1) * _c(q, e)),
    (lambda q, e: (q - e - 1) * (q - e), lambda q, e: q * (q**2 + 1) * _c(q, e)),
    (lambda q, e: H * (q - e - 1) * (q - e), lambda q, e: q**2 * (q**2 + 1) * _c(q, e)),
    (lambda q, e: H * (q - e - 2) * (q - e - 1) * (q - e), lambda q, e: (q + e) * (q**2 + 1) * _c(q, e)),
    (lambda q, e: H * (q - e - 2) * (q - e - 1) * (q - e), lambda q, e: q * (q + e) * (q**2 + 1) * _c(q, e)),
    (
        lambda q, e: Fraction(1, 24) * (q - e - 3) * (q - e - 2) * (q - e - 1) * (q - e),
        lambda q, e: (q**2 + 1) * (q + e) ** 2 * _c(q, e),
    ),
    (lambda q, e: H * (q + e - 1) * (q - e) ** 2, lambda q, e: (q - e) * (q**2 + 1) * _c(q, e)),
    (lambda q, e: H * (q + e - 1) * (q - e) ** 2, lambda q, e: q * (q - e) * (q**2 + 1) * _c(q, e)),
    (lambda q, e: Fraction(1, 4) * q * (q - 2) * (q - e) ** 2, lambda q, e: (q**4 - 1) * _c(q, e)),
    (lambda q, e: H * (q + e - 1) * (q - e), lambda q, e: q**2 * (q - e) ** 2 * _c(q, e)),
    (lambda q, e: H * (q + e - 1) * (q - e), lambda q, e: (q - e) ** 2 * _c(q, e)),
    (
        lambda q, e: Fraction(1, 8) * (q**2 - q - 2) * (q**2 - q - 2 + 2 * e),
        lambda q, e: (q - e) ** 2 * (q**2 + 1) * _c(q, e),
    ),
    (lambda q, e: Fraction(1, 3) * q * (q**2 - 1) * (q - e), lambda q, e: (q**4 - 1) * (q**2 - 1)),
    (lambda q, e: Fraction(1, 4) * q**2 * (q**2 - 1), lambda q, e: (q - e) ** 2 * (q**2 - 1) * _c(q, e)),
]

# Degrees of rows 6 and 8 exactly as printed (1-based row -> degree).  With
# these the sum of squared degrees misses the group order.
TABLE_N4_PRINTED: dict[int, Callable[[RatPoly, int], RatPoly]] = {
    6: lambda q, e: (q + e) * (q**3 + e),
    8: lambda q, e: q**3 * (q**3 + e) * (q + e),
}

FIELD_TABLES = {2: TABLE_N2, 3: TABLE_N3, 4: TABLE_N4}


def field_table_rows(n: int, eps: int, printed: bool = False) -> list[tuple[RatPoly, RatPoly]]:
    """Rows ``(mult, deg)`` of the field table for ``n``; ``printed`` restores misprints."""
    rows = []
    for i, (m, d) in enumerate(FIELD_TABLES[n], start=1):
        if printed and n == 4 and i in TABLE_N4_PRINTED:
            d = TABLE_N4_PRINTED[i]
        rows.append((m(Q, eps), d(Q, eps)))
    return rows


# -- group specs ------------------------------------------------------------


@dataclass(frozen=True)
class Linear:
    """``G^eps_n`` over the length-``l`` ring with residue field of size ``q**ext``.

    ``eps`` is the effective sign, i.e. already raised to the power ``ext``.
    """

    n: int
    l: int
    eps: int
    ext: int = 1

    def text(self) -> str:
        name = "GL" if self.eps == 1 else "GU"
        return f"{name}({self.n},{self.l})@q^{self.ext}"


@dataclass(frozen=True)
class FamilyL1:
    """The semidirect product ``H^eps x| D^eps_l`` (centralizer of a ``(l,1)`` block)."""

    l: int
    eps: int

    def text(self) -> str:
        return f"L1({self.l})"


@dataclass(frozen=True)
class Family211:
    """The semidirect product ``E^eps x| M^eps`` (centralizer of a ``(2,1,1)`` block)."""

    eps: int

    def text(self) -> str:
        return "G211"


@dataclass(frozen=True)
class AbelianOfOrder:
    order: RatPoly

    def text(self) -> str:
        return f"Ab({self.order})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def text(self) -> str:
        return " x ".join(f.text() for f in self.factors)


GroupSpec = Union[Linear, FamilyL1, Family211, AbelianOfOrder, Product]


def _supported_linear(g: Linear) -> bool:
    if g.n < 1 or g.l < 1 or g.ext < 1:
        return False
    if g.n == 1:
        return g.l <= 4
    if g.l == 1:
        return g.n <= 4 and (g.ext == 1 or (g.ext == 2 and g.n <= 2))
    return g.n == 2 and g.l == 2 and g.ext == 1


def field_group_order(n: int, eps: int) -> RatPoly:
    """``|G^eps_n(F_q)| = q^(n(n-1)/2) * prod (q^i - eps^i)``."""
    return Q ** (n * (n - 1) // 2) * prod(Q**i - eps**i for i in range(1, n + 1))


def order_of(g: GroupSpec) -> RatPoly:
    if isinstance(g, Linear):
        if not _supported_linear(g):
            raise UnsupportedSpec(g.text())
        base = Q ** ((g.l - 1) * g.n * g.n) * field_group_order(g.n, g.eps)
        return base.subs_power(g.ext)
    if isinstance(g, FamilyL1):
        if g.l not in (2, 3):
            raise UnsupportedSpec(g.text())
        e = g.eps
        # |H| = q^3, |D_l| = |G_1(o_{l-1})| * |G_1(o_1)|
        return Q**3 * Q ** (g.l - 2) * (Q - e) ** 2
    if isinstance(g, Family211):
        # |E| = q^5, |M| = |G_1(o_1)| * |G_2(o_1)|
        return Q**5 * (Q - g.eps) * field_group_order(2, g.eps)
    if isinstance(g, AbelianOfOrder):
        return g.order
    if isinstance(g, Product):
        return prod(order_of(f) for f in g.factors)
    raise UnsupportedSpec(repr(g))


def field_zeta(n: int, eps: int, ext: int = 1) -> ZetaSeries:
    """Transcribed zeta series of ``G^eps_n(F_{q^ext})``; ``eps`` is effective."""
    check_sign(eps)
    qd = Q**ext
    label = Linear(n, 1, eps, ext).text()
    if n == 1:
        return ZetaSeries.build([(qd - eps, ONE)], eps, label)
    try:
        rows = FIELD_TABLES[n]
    except KeyError:
        raise UnsupportedSpec(label) from None
    return ZetaSeries.build([(m(qd, eps), d(qd, eps)) for m, d in rows], eps, label)


def _family_l1_zeta(l: int, e: int) -> ZetaSeries:
    c = Q ** (l - 2)
    return ZetaSeries.build(
        [
            (c * (Q - e) ** 2, ONE),
            (c * (Q**2 - 1), Q - e),
            (c * (Q - e) ** 2 * (Q - 1), Q),
        ],
        e,
        FamilyL1(l, e).text(),
    )


def k_zeta(e: int) -> ZetaSeries:
    """Zeta series of ``E/Z(E) x| M``, one transcription per sign."""
    z2 = field_zeta(2, e)
    if e == 1:
        extra = [
            (2 * (Q - 1) ** 2, Q**2 - 1),
            ((Q - 1) * (Q + 2), (Q**2 - 1) * (Q - 1)),
            ((Q - 1) ** 3, Q * (Q**2 - 1)),
        ]
        lead = scale_multiplicities(z2, Q - 1)
    else:
        extra = [
            ((Q**2 - 1) * (Q + 1), Q * (Q**2 - 1)),
            (Q * (Q**2 - 1) * (Q - 1), (Q + 1) ** 2),
        ]
        lead = scale_multiplicities(z2, Q + 1)
    return merge(lead, ZetaSeries.build(extra, e), label="K")


def _family211_zeta(e: int) -> ZetaSeries:
    top = scale_degrees(scale_multiplicities(field_zeta(2, e), (Q - 1) * (Q - e)), Q**2)
    return merge(top, k_zeta(e), label=Family211(e).text())


def spec_eps(g: GroupSpec) -> int | None:
    """The sign of the ambient group a spec belongs to, where it is determined."""
    if isinstance(g, (FamilyL1, Family211)):
        return g.eps
    if isinstance(g, Linear):
        return g.eps
    if isinstance(g, Product):
        for f in g.factors:
            s = spec_eps(f)
            if s is not None:
                return s
    return None


def zeta_of(g: GroupSpec, eps: int | None = None, assembler_hook=None) -> ZetaSeries:
    """Zeta series of ``g``; ``eps`` tags the result when the spec is sign-free.

    The series' ``epsilon`` records the ambient sign so that factors of a
    product can be combined; it does not change any term.
    """
    if eps is None:
        eps = spec_eps(g) or 1
    if isinstance(g, Linear):
        if not _supported_linear(g):
            raise UnsupportedSpec(g.text())
        if g.l == 1:
            return field_zeta(g.n, g.eps, g.ext).relabel(g.text()).with_epsilon(eps)
        if g.n == 1:
            qd = Q**g.ext
            order = qd ** (g.l - 1) * (qd - g.eps)
            return ZetaSeries.build([(order, ONE)], eps, g.text())
        if assembler_hook is None:
            from .assembler import assemble as assembler_hook
        return assembler_hook(g.n, g.eps).relabel(g.text()).with_epsilon(eps)
    if isinstance(g, FamilyL1):
        if g.l not in (2, 3):
            raise UnsupportedSpec(g.text())
        return _family_l1_zeta(g.l, g.eps)
    if isinstance(g, Family211):
        return _family211_zeta(g.eps)
    if isinstance(g, AbelianOfOrder):
        return ZetaSeries.build([(g.order, ONE)], eps, g.text())
    if isinstance(g, Product):
        acc = ZetaSeries.trivial(eps)
        for f in g.factors:
            acc = product(acc, zeta_of(f, eps, assembler_hook))
        return acc.relabel(g.text())
    raise UnsupportedSpec(repr(g))

