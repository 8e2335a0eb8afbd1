"""Batched matrix arithmetic over a :class:`Ring`.

Matrices are integer arrays of shape ``(N, n, n)`` holding ring codes; every
function works on the whole batch at once through the ring's tables.
Determinants use the Leibniz expansion, which is division-free and cheap for
``n <= 4``.  Over a prime field the codes are the residues themselves, so
plain integer arithmetic followed by one reduction replaces the table lookups.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .fields import Ring


def _prime(R: Ring) -> int | None:
    return R.meta["p"] if R.meta.get("k") == 1 else None


@lru_cache(maxsize=None)
def _signed_perms(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inversions % 2 else 1))
    return tuple(out)


def det_of(R: Ring, M: np.ndarray, rows: tuple[int, ...], cols: tuple[int, ...]) -> np.ndarray:
    """Batched determinant of the minor on ``rows`` x ``cols``."""
    k = len(rows)
    p = _prime(R)
    if p is not None:
        acc = 0
        for perm, sign in _signed_perms(k):
            term = M[:, rows[0], cols[perm[0]]]
            for i in range(1, k):
                term = term * M[:, rows[i], cols[perm[i]]]
            acc = acc + term if sign > 0 else acc - term
        return acc % p
    total = np.zeros(M.shape[0], dtype=np.int64)
    for perm, sign in _signed_perms(k):
        term = M[:, rows[0], cols[perm[0]]]
        for i in range(1, k):
            term = R.mul[term, M[:, rows[i], cols[perm[i]]]]
        total = R.add[total, term] if sign > 0 else R.add[total, R.neg[term]]
    return total


def det(R: Ring, M: np.ndarray) -> np.ndarray:
    n = M.shape[1]
    idx = tuple(range(n))
    return det_of(R, M, idx, idx)


def matmul(R: Ring, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Batched product; ``A`` or ``B`` may also be a single ``(n, n)`` matrix."""
    A = np.broadcast_to(A, B.shape) if A.ndim == 2 else A
    B = np.broadcast_to(B, A.shape) if B.ndim == 2 else B
    n = A.shape[1]
    p = _prime(R)
    if p is not None:
        return np.matmul(A, B) % p
    C = np.zeros(A.shape, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = R.mul[A[:, i, 0], B[:, 0, j]]
            for k in range(1, n):
                acc = R.add[acc, R.mul[A[:, i, k], B[:, k, j]]]
            C[:, i, j] = acc
    return C


def conj_transpose(R: Ring, A: np.ndarray) -> np.ndarray:
    return R.conj[np.swapaxes(A, -1, -2)]


def charpoly(R: Ring, M: np.ndarray) -> np.ndarray:
    """Coefficients ``c_0 .. c_{n-1}`` of ``det(t - M)`` (monic, leading 1 omitted).

    ``c_{n-k} = (-1)^k e_k`` with ``e_k`` the sum of principal ``k``-minors.
    """
    N, n, _ = M.shape
    out = np.zeros((N, n), dtype=np.int64)
    for k in range(1, n + 1):
        e = np.zeros(N, dtype=np.int64)
        for idx in combinations(range(n), k):
            e = R.add[e, det_of(R, M, idx, idx)]
        out[:, n - k] = e if k % 2 == 0 else R.neg[e]
    return out


def rank_field(R: Ring, M: np.ndarray) -> np.ndarray:
    """Batched rank over a field by row reduction, one pivot column at a time."""
    A = M.copy()
    N, n, m = A.shape
    p = _prime(R)
    rank = np.zeros(N, dtype=np.int64)
    rows = np.arange(n)
    batch = np.arange(N)
    for c in range(m):
        cand = (A[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = batch[has]
        r = rank[has]
        piv = np.argmax(cand[has], axis=1)
        top, low = A[b, r].copy(), A[b, piv].copy()
        A[b, r], A[b, piv] = low, top
        scale = R.inv[A[b, r, c]]
        if p is not None:
            A[b, r] = (A[b, r] * scale[:, None]) % p
        else:
            A[b, r] = R.mul[A[b, r], scale[:, None]]
        pivot_row = A[b, r]
        for i in range(n):
            f = A[b, i, c]
            f = np.where(r == i, 0, f)
            if p is not None:
                A[b, i] = (A[b, i] - f[:, None] * pivot_row) % p
            else:
                A[b, i] = R.add[A[b, i], R.neg[R.mul[f[:, None], pivot_row]]]
        rank[has] += 1
    return rank


def poly_at_matrix(R: Ring, coeffs: tuple[int, ...], M: np.ndarray) -> np.ndarray:
    """``f(M)`` for the monic ``f = t^d + coeffs[d-1] t^(d-1) + ... + coeffs[0]``."""
    n = M.shape[1]
    P = M.copy()  # leading term t, then Horner
    d = len(coeffs)
    P[:, range(n), range(n)] = R.add[P[:, range(n), range(n)], coeffs[d - 1]]
    for c in reversed(coeffs[: d - 1]):
        P = matmul(R, P, M)
        P[:, range(n), range(n)] = R.add[P[:, range(n), range(n)], c]
    return P
