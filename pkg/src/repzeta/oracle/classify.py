"""Similarity invariants of matrices over a finite field, and their types.

The invariant of ``A`` is the multiset of pairs ``(f, nu)``: ``f`` runs over
the monic irreducible factors of the characteristic polynomial and ``nu`` is
the partition of Jordan block sizes at ``f``.  It is read off from kernel
dimensions: if ``d_j = dim ker f(A)^j`` then ``(d_j - d_{j-1}) / deg f`` parts
of ``nu`` are at least ``j``.

Polynomials are tuples of ring codes, low degree first, with the leading 1
omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from ..errors import InconsistencyError
from ..typesys import TypeSymbol
from .fields import Ring
from .linalg import charpoly, matmul, poly_at_matrix, rank_field

Poly = tuple[int, ...]


@dataclass(frozen=True, order=True)
class ClassInvariant:
    """Sorted ``((f, nu), ...)``; equal invariants mean similar matrices."""

    parts: tuple[tuple[Poly, tuple[int, ...]], ...]

    @property
    def size(self) -> int:
        return sum(len(f) * sum(nu) for f, nu in self.parts)


# -- polynomial arithmetic over a field ------------------------------------


def _full(f: Poly) -> list[int]:
    return list(f) + [1]


def _divmod_monic(R: Ring, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], a
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db]
        quot[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] = int(R.add[a[k + i], R.neg[R.mul[c, y]]])
    rem = a[:db] or [0]
    return quot, rem


def monic_polys(R: Ring, d: int) -> list[Poly]:
    return [tuple(c) for c in product(range(R.size), repeat=d)]


def factor(R: Ring, f: Poly) -> tuple[tuple[Poly, int], ...]:
    """Factor a monic polynomial of degree at most 5 into monic irreducibles."""
    cache = R.meta.setdefault("factor_cache", {})
    if f in cache:
        return cache[f]
    if len(f) > 5:
        raise ValueError("trial division is only exhaustive up to degree 5")
    rest = _full(f)
    found: dict[Poly, int] = {}
    d = 1
    while len(rest) - 1 >= 2 * d:
        hit = None
        for g in monic_polys(R, d):
            quot, rem = _divmod_monic(R, rest, _full(g))
            if not any(rem):
                hit = g
                rest = quot
                break
        if hit is None:
            d += 1
        else:
            found[hit] = found.get(hit, 0) + 1
    if len(rest) > 1:
        found[tuple(rest[:-1])] = found.get(tuple(rest[:-1]), 0) + 1
    out = tuple(sorted(found.items()))
    cache[f] = out
    return out


# -- invariants -----------------------------------------------------------


def _partition_from_kernels(dims: list[int], deg: int, mult: int) -> tuple[int, ...]:
    if dims[-1] != deg * mult:
        raise InconsistencyError(f"generalised eigenspace has dimension {dims[-1]}, expected {deg * mult}")
    at_least = []
    prev = 0
    for d in dims:
        step = d - prev
        if step % deg:
            raise InconsistencyError("kernel dimensions not divisible by the factor degree")
        if step:
            at_least.append(step // deg)
        prev = d
    # at_least[j-1] = number of parts >= j; transpose to get the parts
    return tuple(sum(1 for c in at_least if c > i) for i in range(at_least[0]))


def jordan_partitions(R: Ring, M: np.ndarray, f: Poly, mult: int) -> np.ndarray:
    """Batched partitions at ``f``, padded with zeros to length ``mult``."""
    n = M.shape[1]
    N = M.shape[0]
    out = np.zeros((N, mult), dtype=np.int64)
    if mult == 1:
        out[:, 0] = 1
        return out
    F = poly_at_matrix(R, f, M)
    P = F
    dims = []
    for j in range(1, mult + 1):
        if j > 1:
            P = matmul(R, P, F)
        dims.append(n - rank_field(R, P))
    dims = np.stack(dims, axis=1)
    for row in np.unique(dims, axis=0):
        nu = _partition_from_kernels([int(x) for x in row], len(f), mult)
        mask = (dims == row).all(axis=1)
        out[mask, : len(nu)] = nu
    return out


def classify_batch(R: Ring, M: np.ndarray) -> list[ClassInvariant]:
    """Invariants of every matrix in the batch ``M`` (shape ``(N, n, n)``)."""
    if not R.is_field:
        raise ValueError(f"{R} is not a field")
    polys = charpoly(R, M)
    out: list[ClassInvariant | None] = [None] * M.shape[0]
    codes, inverse = np.unique(polys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    for k, code in enumerate(codes):
        idx = np.flatnonzero(inverse == k)
        sub = M[idx]
        facs = factor(R, tuple(int(c) for c in code))
        columns = [(f, jordan_partitions(R, sub, f, m)) for f, m in facs]
        for r, i in enumerate(idx):
            parts = tuple(sorted((f, tuple(int(x) for x in nus[r] if x)) for f, nus in columns))
            out[i] = ClassInvariant(parts)
    return out  # type: ignore[return-value]


def classify(A, R: Ring) -> ClassInvariant:
    """Invariant of a single square matrix over the field ``R``."""
    M = np.asarray(A, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("expected a square matrix")
    return classify_batch(R, M[None])[0]


# -- types ----------------------------------------------------------------


def gl_type(inv: ClassInvariant) -> TypeSymbol:
    return TypeSymbol(tuple((len(f), nu) for f, nu in inv.parts))


def dual_poly(R: Ring, f: Poly) -> Poly:
    """``(-1)^e conj(f)(-t)``: the factor matched with ``f`` under ``A -> -A^*``."""
    e = len(f)
    out = []
    for i, c in enumerate(f):
        c = int(R.conj[c])
        out.append(int(R.neg[c]) if (e - i) % 2 else c)
    return tuple(out)


def gu_type(R: Ring, inv: ClassInvariant) -> TypeSymbol:
    """Type of an anti-hermitian matrix from its invariant over ``F_{q^2}``.

    A self-dual factor of degree ``e`` is a label of degree ``e``; a pair of
    distinct dual factors of degree ``e`` is one label of degree ``2e``.
    """
    parts = dict(inv.parts)
    slots = []
    seen = set()
    for f, nu in inv.parts:
        if f in seen:
            continue
        g = dual_poly(R, f)
        if g == f:
            slots.append((len(f), nu))
            seen.add(f)
        else:
            if parts.get(g) != nu:
                raise InconsistencyError(f"dual factors {f} and {g} carry different partitions")
            slots.append((2 * len(f), nu))
            seen.update((f, g))
    return TypeSymbol(tuple(slots))


def charpoly_is_self_dual(R: Ring, coeffs: np.ndarray) -> np.ndarray:
    """Batched test of ``conj(c_i) = (-1)^(n-i) c_i`` on characteristic polynomials."""
    n = coeffs.shape[-1]
    ok = np.ones(coeffs.shape[:-1], dtype=bool)
    for i in range(n):
        c = coeffs[..., i]
        target = R.neg[c] if (n - i) % 2 else c
        ok &= R.conj[c] == target
    return ok
