"""Brute-force census of similarity classes in ``gl_n(F_q)`` and ``u_n(F_q)``.

Every matrix is classified, and distinct invariants are tallied by type.  For
the unitary variant the matrices are the anti-hermitian ones over ``F_{q^2}``
(``A^* = -A`` with ``A^*`` the conjugate transpose); their invariants are
taken over ``F_{q^2}`` and mapped to types by pairing dual factors.

The work is chunked and vectorized through the ring tables.  Set
``ZETA_THREADS`` to spread chunks over a thread pool.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..errors import InconsistencyError, TooLarge, UnsupportedCase
from ..typesys import TypeSymbol, enumerate_types
from .classify import (
    ClassInvariant,
    charpoly_is_self_dual,
    factor,
    gl_type,
    gu_type,
    jordan_partitions,
)
from .fields import Ring, finite_field, trace_zero
from .linalg import charpoly

VARIANTS = ("gl", "gu")
DEFAULT_LIMIT = 2_000_000  # matrices; larger runs need slow=True
HARD_LIMIT = 50_000_000
CHUNK = 1 << 17


def _field_for(q: int, variant: str) -> Ring:
    p = next((p for p in range(2, q + 1) if q % p == 0), None)
    k = 0
    m = q
    while p is not None and m % p == 0:
        m //= p
        k += 1
    if p is None or m != 1:
        raise UnsupportedCase(f"q={q} is not a prime power")
    try:
        return finite_field(p, k if variant == "gl" else 2 * k)
    except ValueError as exc:
        raise UnsupportedCase(str(exc)) from None


@dataclass
class CensusResult:
    n: int
    q: int
    variant: str
    per_type: dict[TypeSymbol, int]
    elapsed_ms: float = 0.0
    invariants: set[ClassInvariant] = field(default_factory=set, repr=False)

    @property
    def total(self) -> int:
        return sum(self.per_type.values())

    def to_json(self) -> dict:
        """Deterministic payload; timing lives in :meth:`timing_json`."""
        order = enumerate_types(self.n)
        return {
            "n": self.n,
            "q": self.q,
            "variant": self.variant,
            "per_type": [{"type": t.text(), "classes": self.per_type.get(t, 0)} for t in order],
            "total": self.total,
        }

    def timing_json(self) -> dict:
        return {"n": self.n, "q": self.q, "variant": self.variant, "elapsed_ms": round(self.elapsed_ms, 1)}


class _Space:
    """Index ``i`` in ``range(size)`` -> a matrix, decoded digit by digit."""

    def __init__(self, R: Ring, n: int, variant: str):
        self.R, self.n, self.variant = R, n, variant
        if variant == "gl":
            self.cells = [(i, j) for i in range(n) for j in range(n)]
            self.alphabets = [np.arange(R.size)] * len(self.cells)
        else:
            diag = [(i, i) for i in range(n)]
            upper = [(i, j) for i in range(n) for j in range(i + 1, n)]
            self.cells = diag + upper
            self.alphabets = [trace_zero(R)] * n + [np.arange(R.size)] * len(upper)
        self.size = 1
        for a in self.alphabets:
            self.size *= len(a)

    def decode(self, start: int, stop: int) -> np.ndarray:
        idx = np.arange(start, stop, dtype=np.int64)
        M = np.zeros((len(idx), self.n, self.n), dtype=np.int64)
        for (i, j), alpha in zip(self.cells, self.alphabets):
            idx, digit = np.divmod(idx, len(alpha))
            M[:, i, j] = alpha[digit]
            if self.variant == "gu" and i != j:
                M[:, j, i] = self.R.neg[self.R.conj[alpha[digit]]]
        return M


def _encode_rows(rows: np.ndarray, base: int) -> np.ndarray:
    code = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(rows.shape[1]):
        code = code * base + rows[:, i]
    return code


def _chunk_invariants(R: Ring, M: np.ndarray, variant: str) -> set[ClassInvariant]:
    polys = charpoly(R, M)
    if variant == "gu" and not charpoly_is_self_dual(R, polys).all():
        raise InconsistencyError("an anti-hermitian matrix has a characteristic polynomial that is not self-dual")
    found = set()
    keys = _encode_rows(polys, R.size)
    codes, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
    for k in range(len(codes)):
        facs = factor(R, tuple(int(c) for c in polys[first[k]]))
        if all(m == 1 for _, m in facs):
            found.add(ClassInvariant(tuple(sorted((f, (1,)) for f, _ in facs))))
            continue
        sub = M[inverse == k]
        table = np.concatenate([jordan_partitions(R, sub, f, m) for f, m in facs], axis=1)
        _, pick = np.unique(_encode_rows(table, M.shape[1] + 1), return_index=True)
        for row in table[pick]:
            parts, pos = [], 0
            for f, m in facs:
                parts.append((f, tuple(int(x) for x in row[pos : pos + m] if x)))
                pos += m
            found.add(ClassInvariant(tuple(sorted(parts))))
    return found


def census(n: int, q: int, variant: str = "gl", slow: bool = False, chunk: int = CHUNK) -> CensusResult:
    """Count similarity classes of each type by classifying every matrix."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if n < 1 or n > 4:
        raise UnsupportedCase("census supports 1 <= n <= 4")
    R = _field_for(q, variant)
    space = _Space(R, n, variant)
    if space.size > HARD_LIMIT or (space.size > DEFAULT_LIMIT and not slow):
        raise TooLarge(f"{space.size} matrices for n={n}, q={q}, variant={variant}" + ("" if slow else "; pass slow"))
    started = time.perf_counter()
    bounds = [(s, min(s + chunk, space.size)) for s in range(0, space.size, chunk)]

    def work(b):
        return _chunk_invariants(R, space.decode(*b), variant)

    threads = int(os.environ.get("ZETA_THREADS", "1") or 1)
    invariants: set[ClassInvariant] = set()
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(threads) as pool:
            for part in pool.map(work, bounds):
                invariants |= part
    else:
        for b in bounds:
            invariants |= work(b)

    to_type = gl_type if variant == "gl" else (lambda inv: gu_type(R, inv))
    per_type: dict[TypeSymbol, int] = {}
    for inv in invariants:
        t = to_type(inv)
        per_type[t] = per_type.get(t, 0) + 1
    elapsed = (time.perf_counter() - started) * 1000
    return CensusResult(n, q, variant, per_type, elapsed, invariants)
