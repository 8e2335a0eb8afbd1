"""Similarity-class types (Green symbols) and their class counts.

A type of size ``n`` is a multiset of slots ``(d, nu)``: ``d`` is the degree
of an irreducible factor of the characteristic polynomial and ``nu`` the
partition recording its Jordan structure, subject to ``sum d*|nu| = n``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

from .polyq import ONE, Q, RatPoly

Partition = tuple[int, ...]
Slot = tuple[int, Partition]


def partitions(k: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``k`` as weakly decreasing tuples, in reverse lex order."""
    if max_part is None:
        max_part = k
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return out


def is_partition(nu) -> bool:
    return len(nu) > 0 and all(p > 0 for p in nu) and all(a >= b for a, b in zip(nu, nu[1:]))


def format_partition(nu: Partition) -> str:
    return "(" + ",".join(str(p) for p in nu) + ")"


@dataclass(frozen=True, order=True)
class TypeSymbol:
    slots: tuple[Slot, ...]

    def __post_init__(self):
        for d, nu in self.slots:
            if d < 1 or not is_partition(nu):
                raise ValueError(f"bad slot ({d}, {nu})")
        canon = tuple(sorted(self.slots, reverse=True))
        object.__setattr__(self, "slots", canon)

    @classmethod
    def of(cls, *slots: tuple[int, tuple[int, ...]]) -> "TypeSymbol":
        return cls(tuple((d, tuple(nu)) for d, nu in slots))

    @property
    def size(self) -> int:
        return sum(d * sum(nu) for d, nu in self.slots)

    def text(self) -> str:
        groups: dict[int, list[Partition]] = {}
        for d, nu in self.slots:
            groups.setdefault(d, []).append(nu)
        chunks = []
        for d in sorted(groups):
            nus = sorted(groups[d], reverse=True)
            chunks.append(" + ".join(f"{d}:{format_partition(nu)}" for nu in nus))
        return " ; ".join(chunks)

    __str__ = text

    @classmethod
    def parse(cls, text: str) -> "TypeSymbol":
        slots = []
        for m in re.finditer(r"(\d+)\s*:\s*\(([\d,\s]*)\)", text):
            parts = tuple(int(x) for x in m.group(2).split(",") if x.strip())
            slots.append((int(m.group(1)), parts))
        if not slots:
            raise ValueError(f"cannot parse type symbol {text!r}")
        return cls(tuple(slots))

    def to_json(self) -> list:
        return [[d, list(nu)] for d, nu in self.slots]


def _atoms(n: int) -> list[Slot]:
    atoms = []
    for d in range(1, n + 1):
        for k in range(1, n // d + 1):
            for nu in partitions(k):
                atoms.append((d, nu))
    return atoms


@lru_cache(maxsize=None)
def enumerate_types(n: int) -> tuple[TypeSymbol, ...]:
    """Every type of size ``n``, duplicate-free, in canonical order."""
    if n < 1:
        raise ValueError("n must be positive")
    atoms = _atoms(n)
    found = set()
    for r in range(1, n + 1):
        for combo in combinations_with_replacement(atoms, r):
            if sum(d * sum(nu) for d, nu in combo) == n:
                found.add(TypeSymbol(combo))
    return tuple(sorted(found, reverse=True))


def mobius(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def necklace_count(d: int) -> RatPoly:
    """Number of monic irreducible degree-``d`` polynomials over F_q."""
    if d < 1:
        raise ValueError("degree must be positive")
    acc = RatPoly()
    for e in range(1, d + 1):
        if d % e == 0:
            acc = acc + mobius(e) * Q ** (d // e)
    return acc / d


def class_count(t: TypeSymbol, eps: int = 1) -> RatPoly:
    """Number ``n_A`` of similarity classes of type ``t``.

    The same polynomial serves both signs: labels of degree ``d`` are counted
    by the necklace polynomial in either case.
    """
    by_degree: dict[int, Counter] = {}
    for d, nu in t.slots:
        by_degree.setdefault(d, Counter())[nu] += 1
    total = ONE
    for d, shapes in by_degree.items():
        k = sum(shapes.values())
        n_d = necklace_count(d)
        falling = ONE
        for i in range(k):
            falling = falling * (n_d - i)
        denom = 1
        for m in shapes.values():
            denom *= factorial(m)
        total = total * falling / denom
    return total
