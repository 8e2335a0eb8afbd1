"""Level-2 assembly: zeta of ``G^eps_n(o_2)`` from centralizers of types.

Irreducible characters of ``G^eps_n(o_2)`` correspond to pairs (similarity
class ``A`` in the level-1 Lie algebra, irreducible character of the
centralizer of ``A``), with degree multiplied by the orbit size of ``A``.
Classes of the same type have isomorphic centralizers, so

    zeta(s) = sum over types A of n_A * zeta_{Z(A)}(s) * |G : Z(A)|^(-s).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnknownSlotShape
from .polyq import RatPoly, div_exact
from .registry import (
    Family211,
    FamilyL1,
    GroupSpec,
    Linear,
    Product,
    order_of,
    zeta_of,
)
from .typesys import TypeSymbol, class_count, enumerate_types
from .zeta_core import (
    ZetaSeries,
    check_sign,
    merge_all,
    scale_degrees,
    scale_multiplicities,
)


@dataclass(frozen=True)
class TypeRow:
    t: TypeSymbol
    eps: int
    count: RatPoly
    centralizer: GroupSpec
    index: RatPoly

    def to_json(self) -> dict:
        return {
            "type": self.t.text(),
            "slots": self.t.to_json(),
            "n_A": self.count.to_json(),
            "centralizer": self.centralizer.text(),
            "centralizer_order": order_of(self.centralizer).to_json(),
            "index": self.index.to_json(),
        }


def slot_centralizer(d: int, nu: tuple[int, ...], eps: int) -> GroupSpec:
    """Centralizer factor contributed by one slot ``(d, nu)``."""
    e = eps**d
    if all(p == 1 for p in nu):
        return Linear(len(nu), 1, e, d)
    if len(nu) == 1:
        return Linear(1, nu[0], e, d)
    if d == 1:
        if nu == (2, 1):
            return FamilyL1(2, e)
        if nu == (3, 1):
            return FamilyL1(3, e)
        if nu == (2, 2):
            return Linear(2, 2, e, 1)
        if nu == (2, 1, 1):
            return Family211(e)
    raise UnknownSlotShape(f"no centralizer rule for slot d={d}, nu={nu}")


def centralizer_of(t: TypeSymbol, eps: int) -> GroupSpec:
    check_sign(eps)
    factors = tuple(slot_centralizer(d, nu, eps) for d, nu in t.slots)
    return factors[0] if len(factors) == 1 else Product(factors)


def index_of(t: TypeSymbol, eps: int) -> RatPoly:
    n = t.size
    ambient = order_of(Linear(n, 1, eps, 1))
    z = centralizer_of(t, eps)
    return div_exact(ambient, order_of(z), context=f"index of centralizer for type [{t}] eps={eps}")


def type_rows(n: int, eps: int) -> list[TypeRow]:
    return [
        TypeRow(t, eps, class_count(t, eps), centralizer_of(t, eps), index_of(t, eps))
        for t in enumerate_types(n)
    ]


def ambient_label(n: int, l: int, eps: int) -> str:
    return f"{'GL' if eps == 1 else 'GU'}_{n}(o_{l})"


@lru_cache(maxsize=None)
def assemble(n: int, eps: int) -> ZetaSeries:
    """Zeta series of ``G^eps_n(o_2)`` for ``2 <= n <= 4``."""
    if not 2 <= n <= 4:
        raise ValueError(f"assembly is implemented for 2 <= n <= 4, got n={n}")
    check_sign(eps)
    parts = []
    for row in type_rows(n, eps):
        z = zeta_of(row.centralizer, eps, assembler_hook=assemble)
        contrib = scale_degrees(scale_multiplicities(z, row.count), row.index)
        parts.append(contrib.tagged(row.t.text()))
    return merge_all(parts, eps, ambient_label(n, 2, eps))


def level_zeta(n: int, l: int, eps: int) -> ZetaSeries:
    """Zeta series of ``G^eps_n(o_l)`` for the supported levels ``l in {1, 2}``."""
    if l == 1:
        return zeta_of(Linear(n, 1, eps, 1), eps).relabel(ambient_label(n, 1, eps))
    if l == 2:
        return assemble(n, eps)
    raise ValueError(f"level must be 1 or 2, got {l}")
