"""Transcribed reference data: class-type tables, degree lists, special values.

Every entry is a function of ``(q, e)`` returning a :class:`RatPoly`, typed
exactly as printed in the source tables, so that the computed values can
be compared against them.  Nothing here feeds the engine; the engine derives
its counts, centralizers and indices generically and these rows only audit it.

Known misprints are listed in :data:`ERRATA`.  Each erratum names the cells
it covers and is backed by a machine-checkable certificate in
:mod:`repzeta.audit`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .polyq import Q, RatPoly
from .registry import field_group_order
from .typesys import TypeSymbol

PolyFn = Callable[[RatPoly, int], RatPoly]

H = Fraction(1, 2)


def _g(n: int) -> PolyFn:
    return lambda q, e: field_group_order(n, e)


@dataclass(frozen=True)
class TableRow:
    table: str
    row: int
    printed_type: TypeSymbol
    n_a: PolyFn
    centralizer: str
    centralizer_order: PolyFn
    index: PolyFn

    @property
    def key(self) -> tuple[str, int]:
        return (self.table, self.row)


def _t(*slots) -> TypeSymbol:
    return TypeSymbol.of(*slots)


# Similarity-class types of gl_2 / gu_2 over the residue field
TYPES_N2 = [
    TableRow("n2", 1, _t((1, (1, 1))), lambda q, e: q, "G2(o1)", _g(2), lambda q, e: Q**0),
    TableRow("n2", 2, _t((1, (2,))), lambda q, e: q, "G1(o2)", lambda q, e: q * (q - e), lambda q, e: q**2 - 1),
    TableRow(
        "n2", 3, _t((1, (1,)), (1, (1,))), lambda q, e: H * q * (q - 1),
        "G1(o1) x G1(o1)", lambda q, e: (q - e) ** 2, lambda q, e: q * (q + e),
    ),
    TableRow(
        "n2", 4, _t((2, (1,))), lambda q, e: H * q * (q - 1),
        "F_{q^2}^*", lambda q, e: q**2 - 1, lambda q, e: q * (q - e),
    ),
]

TYPES_N3 = [
    TableRow("n3", 1, _t((1, (1, 1, 1))), lambda q, e: q, "G3(o1)", _g(3), lambda q, e: Q**0),
    TableRow(
        "n3", 2, _t((1, (2, 1))), lambda q, e: q, "G(2,1)",
        lambda q, e: q**3 * (q - e) ** 2, lambda q, e: (q**3 - e) * (q + e),
    ),
    TableRow(
        "n3", 3, _t((1, (3,))), lambda q, e: q, "G1(o3)",
        lambda q, e: q**2 * (q - e), lambda q, e: q * (q**2 - 1) * (q**3 - e),
    ),
    TableRow(
        "n3", 4, _t((1, (1, 1)), (1, (1,))), lambda q, e: q * (q - 1), "G1(o1) x G2(o1)",
        lambda q, e: (q - e) * field_group_order(2, e), lambda q, e: q**2 * (q + e) * (q**3 - e),
    ),
    TableRow(
        "n3", 5, _t((1, (1, 1)), (1, (1,))), lambda q, e: q * (q - 1), "G1(o1) x G1(o2)",
        lambda q, e: q * (q - e) ** 2, lambda q, e: q**2 * (q + e) * (q**3 - e),
    ),
    TableRow(
        "n3", 6, _t((1, (1,)), (1, (1,)), (1, (1,))), lambda q, e: Fraction(1, 6) * q * (q - 1) * (q - 2),
        "G1(o1)^3", lambda q, e: (q - e) ** 3, lambda q, e: q**3 * (q + e) * (q**2 + e * q + 1),
    ),
    TableRow(
        "n3", 7, _t((1, (1,)), (2, (1,))), lambda q, e: H * q**2 * (q - 1), "G1(o1) x F_{q^2}^*",
        lambda q, e: (q - e) * (q**2 - 1), lambda q, e: q**3 * (q**3 - e),
    ),
    TableRow(
        "n3", 8, _t((3, (1,))), lambda q, e: Fraction(1, 3) * q * (q**2 - 1), "G1(F_{q^3})",
        lambda q, e: q**3 - e, lambda q, e: q**3 * (q**2 - 1) * (q - e),
    ),
]

_C = lambda q, e: q**2 + e * q + 1  # noqa: E731

TYPES_N4 = [
    TableRow("n4", 1, _t((1, (1, 1, 1, 1))), lambda q, e: q, "G4(o1)", _g(4), lambda q, e: Q**0),
    TableRow(
        "n4", 2, _t((1, (2, 1, 1))), lambda q, e: q, "G(2,1,1)",
        lambda q, e: q**5 * (q - e) * field_group_order(2, e),
        lambda q, e: (q**2 + 1) * (q**3 - e) * (q + e),
    ),
    TableRow(
        "n4", 3, _t((1, (2, 2))), lambda q, e: q, "G2(o2)",
        lambda q, e: q**4 * field_group_order(2, e), lambda q, e: q * (q**4 - 1) * (q**3 - e),
    ),
    TableRow(
        "n4", 4, _t((1, (3, 1))), lambda q, e: q, "G(3,1)",
        lambda q, e: q**4 * (q - e) ** 2, lambda q, e: q**2 * (q**4 - 1) * (q**3 - e) * (q + e),
    ),
    TableRow(
        "n4", 5, _t((1, (4,))), lambda q, e: q, "G1(o4)",
        lambda q, e: q**3 * (q - e), lambda q, e: q**3 * (q**4 - 1) * (q**3 - e) * (q**2 - 1),
    ),
    TableRow(
        "n4", 6, _t((1, (1, 1, 1)), (1, (1,))), lambda q, e: q * (q - 1), "G3(o1) x G1(o1)",
        lambda q, e: field_group_order(3, e) * (q - e), lambda q, e: q**3 * (q + e) * (q**2 + 1),
    ),
    TableRow(
        "n4", 7, _t((1, (2, 1)), (1, (1,))), lambda q, e: q * (q - 1), "G(2,1) x G1(o1)",
        lambda q, e: q**3 * (q - e) ** 3, lambda q, e: q**3 * (q**2 + 1) * (q + e) ** 2 * (q**3 - e),
    ),
    TableRow(
        "n4", 8, _t((1, (3,)), (1, (1,))), lambda q, e: q * (q - 1), "G1(o3) x G1(o1)",
        lambda q, e: q**2 * (q - e) ** 2, lambda q, e: q**4 * (q**4 - 1) * (q**3 - e) * (q + e),
    ),
    TableRow(
        "n4", 9, _t((1, (1, 1)), (1, (1, 1))), lambda q, e: H * q * (q - 1), "G2(o1) x G2(o1)",
        lambda q, e: field_group_order(2, e) ** 2, lambda q, e: q**4 * (q**2 + 1) * _C(q, e),
    ),
    TableRow(
        "n4", 10, _t((1, (2,)), (1, (1, 1))), lambda q, e: q * (q - 1), "G1(o2) x G2(o1)",
        lambda q, e: q * (q - e) * field_group_order(2, e), lambda q, e: q**4 * _C(q, e) * (q**4 - 1),
    ),
    TableRow(
        "n4", 11, _t((1, (2,)), (1, (2,))), lambda q, e: H * q * (q - 1), "G1(o2) x G1(o2)",
        lambda q, e: q**2 * (q - e) ** 2, lambda q, e: q**4 * (q + e) * (q**4 - 1) * (q**3 - e),
    ),
    TableRow(
        "n4", 12, _t((1, (1, 1)), (1, (1,)), (1, (1,))), lambda q, e: H * q * (q - 1) * (q - 2),
        "G2(o1) x G1(o1)^2", lambda q, e: field_group_order(2, e) * (q - e) ** 2,
        lambda q, e: q**5 * (q + e) * (q**2 + 1) * _C(q, e),
    ),
    TableRow(
        "n4", 13, _t((1, (2,)), (1, (1,)), (1, (1,))), lambda q, e: H * q * (q - 1) * (q - 2),
        "G1(o1)^3", lambda q, e: (q - e) ** 3,
        lambda q, e: q**5 * (q**2 + 1) * (q + e) ** 2 * (q**3 - e),
    ),
    TableRow(
        "n4", 14, _t((1, (1,)), (1, (1,)), (1, (1,)), (1, (1,))),
        lambda q, e: Fraction(1, 24) * q * (q - 1) * (q - 2) * (q - 3),
        "G1(o1)^4", lambda q, e: (q - e) ** 4,
        lambda q, e: q**6 * (q**3 + e * q**2 + q + e) * (q + e) * _C(q, e),
    ),
    TableRow(
        "n4", 15, _t((1, (1, 1)), (2, (1,))), lambda q, e: H * q**2 * (q - 1), "G2(o1) x F_{q^2}^*",
        lambda q, e: field_group_order(2, e) * (q**2 - 1), lambda q, e: q**5 * (q**3 - e) * (q**4 - 1),
    ),
    TableRow(
        "n4", 16, _t((1, (2,)), (2, (1,))), lambda q, e: H * q**2 * (q - 1), "G1(o2) x F_{q^2}^*",
        lambda q, e: q * (q - e) * (q**2 - 1), lambda q, e: q**5 * (q**3 - e) * (q**4 - 1),
    ),
    TableRow(
        "n4", 17, _t((1, (1,)), (1, (1,)), (2, (1,))), lambda q, e: Fraction(1, 4) * q**2 * (q - 1) ** 2,
        "G1(o1)^2 x F_{q^2}^*", lambda q, e: (q - e) ** 2 * (q**2 - 1),
        lambda q, e: q**6 * (q + e) * (q**2 + 1) * (q**3 - e),
    ),
    TableRow(
        "n4", 18, _t((2, (1, 1))), lambda q, e: H * q * (q - 1), "GL2(F_{q^2})",
        lambda q, e: field_group_order(2, 1).subs_power(2), lambda q, e: q**4 * (q - e) * (q**3 - e),
    ),
    TableRow(
        "n4", 19, _t((2, (2,))), lambda q, e: H * q * (q - 1), "F_{q^2} x F_{q^2}^*",
        lambda q, e: q**2 * (q**2 - 1), lambda q, e: q**4 * (q**4 - 1) * (q**3 - e) * (q - e),
    ),
    TableRow(
        "n4", 20, _t((2, (1,)), (2, (1,))), lambda q, e: Fraction(1, 8) * q * (q - 1) * (q**2 - q - 2),
        "F_{q^2}^* x F_{q^2}^*", lambda q, e: (q**2 - 1) ** 2,
        lambda q, e: q**6 * (q**2 + 1) * (q**3 - e) * (q - e),
    ),
    TableRow(
        "n4", 21, _t((1, (1,)), (3, (1,))), lambda q, e: Fraction(1, 3) * q**2 * (q**2 - 1),
        "G1(o1) x G1(F_{q^3})", lambda q, e: (q - e) * (q**3 - e),
        lambda q, e: q**6 * (q**4 - 1) * (q**2 - 1),
    ),
    TableRow(
        "n4", 22, _t((4, (1,))), lambda q, e: Fraction(1, 4) * q**2 * (q**2 - 1), "F_{q^4}^*",
        lambda q, e: q**4 - 1, lambda q, e: q**6 * (q - e) * (q**2 - 1) * (q**3 - e),
    ),
]

TYPE_TABLES = {2: TYPES_N2, 3: TYPES_N3, 4: TYPES_N4}

# Type actually described by a row whose printed symbol is wrong.
SYMBOL_CORRECTIONS = {("n3", 5): _t((1, (2,)), (1, (1,)))}


def used_type(row: TableRow) -> TypeSymbol:
    return SYMBOL_CORRECTIONS.get(row.key, row.printed_type)


# -- prime-to-p degree lists of G^e_4 ------------------------------------------

PPRIME_LEVEL1: list[PolyFn] = [
    lambda q, e: Q**0,
    lambda q, e: q**2 + 1,
    lambda q, e: _C(q, e),
    lambda q, e: (q + e) ** 2 * (q**2 + 1),
    lambda q, e: (q + e) ** 2 * (q**2 + 1) * _C(q, e),
    lambda q, e: _C(q, e) * (q**4 - 1),
    lambda q, e: (q**2 - 1) * (q**4 - 1),
    lambda q, e: (q**2 + 1) * _C(q, e),
    lambda q, e: (q + e) * (q**3 + e),
    lambda q, e: (q**2 + 1) * (q**3 - e),
    lambda q, e: (q - e) * (q**2 + 1) * (q**3 - e),
    lambda q, e: (q - e) * (q**2 - 1) * (q**3 - e),
    lambda q, e: (q - e) * (q**3 - e),
]

PPRIME_LEVEL2_EXTRA: list[PolyFn] = [
    lambda q, e: (q + e) * (q**2 + 1),
    lambda q, e: (q**3 - e) * (q**4 - 1),
    lambda q, e: (q + e) * (q**3 - e) * (q**4 - 1),
    lambda q, e: (q - e) * (q**3 - e) * (q**4 - 1),
    lambda q, e: (q**2 - 1) * (q**3 - e) * (q**4 - 1),
    lambda q, e: (q + e) * _C(q, e) * (q**4 - 1),
    lambda q, e: (q**3 + e * q**2 + q + e) ** 2,
]

PPRIME_CLAIMED_SIZES = {1: 13, 2: 20}


def listed_pprime_degrees(level: int, eps: int) -> list[RatPoly]:
    """The listed prime-to-p degrees at ``level``, in printed order (duplicates kept)."""
    fns = PPRIME_LEVEL1 + (PPRIME_LEVEL2_EXTRA if level == 2 else [])
    return [f(Q, eps) for f in fns]


# -- special values at s = -1 ------------------------------------------------


@dataclass(frozen=True)
class SpecialValueFixture:
    eps: int
    zeta_minus_one: RatPoly
    difference: RatPoly
    quotient_num: RatPoly
    quotient_den: RatPoly


def special_value_fixture(eps: int) -> SpecialValueFixture:
    q = Q
    if eps == -1:
        num = q**14 + q**7 - 2 * q**6 - q**5 + 2 * q**4 - q**3 + 2 * q**2 + q - 2
        return SpecialValueFixture(
            -1,
            q**2 * (q**2 - q + 1) * num * (q + 1) ** 2,
            q**2 * (q - 2) * (q**2 + 1) * (q**2 - q + 1) * (q - 1) ** 2 * (q + 1) ** 4,
            num,
            q**14,
        )
    if eps == 1:
        num = q**15 + 2 * q**10 - 2 * q**8 + 2 * q**6 - 2 * q**4 - 4 * q**2 + 4
        return SpecialValueFixture(
            1,
            q * (q**2 + q + 1) * num * (q - 1) ** 2,
            2 * q * (q**2 + q + 1) * (q**4 + 2) * (q**2 + 1) * (q + 1) ** 2 * (q - 1) ** 4,
            num,
            q**15,
        )
    raise ValueError(f"epsilon must be +1 or -1, got {eps!r}")


# -- errata -----------------------------------------------------------------


@dataclass(frozen=True)
class Erratum:
    """A misprinted cell.  ``documented`` marks the two misprints known in advance."""

    key: tuple[str, int]
    fields: frozenset[str]
    note: str
    documented: bool


ERRATA: dict[tuple[str, int], Erratum] = {
    e.key: e
    for e in [
        Erratum(
            ("n3", 5), frozenset({"type"}),
            "symbol repeats row 4; the centralizer G1(o1) x G1(o2) identifies type 1:(2) + 1:(1)",
            documented=True,
        ),
        Erratum(
            ("n4", 13), frozenset({"centralizer_order"}),
            "centralizer printed as G1(o1)^3; the index column forces G1(o2) x G1(o1)^2 of order q(q-e)^3",
            documented=True,
        ),
        Erratum(
            ("n3", 4), frozenset({"index"}),
            "index repeats row 5; the orbit sizes only sum to q^9 with q^2(q^2+eq+1)",
            documented=False,
        ),
        Erratum(
            ("n4", 15), frozenset({"index"}),
            "index repeats row 16; |Z| * index = |G_4| needs q^5(q^3-e)(q^2+1)",
            documented=False,
        ),
    ]
}

# Rows of the G^e_4(F_q) degree table whose printed degree fails the
# sum-of-squares identity (see registry.TABLE_N4_PRINTED).
FIELD_TABLE_ERRATA = {
    6: "degree printed (q+e)(q^3+e); the sum of squares needs (q+e)(q^2+1)",
    8: "degree printed q^3(q^3+e)(q+e); the sum of squares needs q^3(q^2+1)(q+e)",
}


def spurious_pprime_degrees(level: int, eps: int) -> dict[RatPoly, str]:
    """Listed prime-to-p degrees that cannot occur at ``level``, with the reason."""
    q, e = Q, eps
    out = {(q + e) * (q**3 + e): "comes from the misprinted rows 6 and 8 of the field table"}
    if level == 2:
        out[(q**3 + e * q**2 + q + e) ** 2] = "(q^2+1)^2 does not divide the group order"
    return out


def missing_pprime_degrees(level: int, eps: int) -> dict[RatPoly, str]:
    """Prime-to-p degrees that occur at ``level`` but are absent from the lists."""
    q, e = Q, eps
    out = {(q + e) * (q**2 + 1) * _C(q, e): "degree of rows 12 and 13 of the field table"}
    if level == 1:
        out[(q + e) * (q**2 + 1)] = "degree of row 6 of the field table, listed only among the level-2 additions"
    return out
