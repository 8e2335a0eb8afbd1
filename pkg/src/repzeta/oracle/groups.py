"""Explicit small matrix groups: element lists, conjugacy classes, symmetric elements.

Groups are materialised as arrays of matrices over a :class:`Ring`.  Every
element gets an integer code, so products and conjugates are located by
binary search.  Conjugacy classes are the orbits of conjugation by a
generating set; the generating set is drawn at random (seeded) and accepted
only once its closure is the whole element list, which also certifies that
the list is a group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import InconsistencyError, UnsupportedGroup
from ..registry import Family211, FamilyL1, GroupSpec, Linear
from .fields import Ring, all_vectors, finite_field, norm_one, residue_ring, unramified_quadratic
from .linalg import det, matmul

KINDS = ("gl", "gu", "gl-o2", "gu-o2", "l1", "211")


@dataclass
class GroupCensus:
    name: str
    order: int
    classes: int
    symmetric: int

    def to_json(self) -> dict:
        return {"group": self.name, "order": self.order, "classes": self.classes, "symmetric": self.symmetric}


@dataclass(eq=False)
class ExplicitGroup:
    name: str
    ring: Ring
    elements: np.ndarray
    spec: GroupSpec
    q: int

    def __post_init__(self):
        self.codes = _encode(self.elements, self.ring.size)
        self.order_idx = np.argsort(self.codes)
        self.sorted_codes = self.codes[self.order_idx]
        if len(np.unique(self.codes)) != len(self.codes):
            raise InconsistencyError(f"{self.name}: repeated elements")

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, mats: np.ndarray) -> np.ndarray:
        codes = _encode(mats, self.ring.size)
        pos = np.searchsorted(self.sorted_codes, codes)
        pos = np.minimum(pos, len(self.codes) - 1)
        if (self.sorted_codes[pos] != codes).any():
            raise InconsistencyError(f"{self.name}: a product left the element list")
        return self.order_idx[pos]

    def left_perm(self, g: np.ndarray) -> np.ndarray:
        return self.index_of(matmul(self.ring, g, self.elements))

    def inverse(self, g: np.ndarray) -> np.ndarray:
        n = g.shape[0]
        eye = np.eye(n, dtype=np.int64)
        prods = matmul(self.ring, g, self.elements)
        hit = np.flatnonzero((prods == eye).all(axis=(1, 2)))
        if len(hit) != 1:
            raise InconsistencyError(f"{self.name}: element without a unique inverse")
        return self.elements[hit[0]]

    def conj_perm(self, g: np.ndarray) -> np.ndarray:
        gi = self.inverse(g)
        return self.index_of(matmul(self.ring, matmul(self.ring, g, self.elements), gi))

    def generators(self, seed: int = 0) -> list[np.ndarray]:
        """Random elements whose closure is the whole list."""
        rng = np.random.default_rng(seed)
        gens: list[np.ndarray] = []
        perms: list[np.ndarray] = []
        while True:
            g = self.elements[rng.integers(self.order)]
            gens.append(g)
            perms.append(self.left_perm(g))
            if len(gens) >= 2 and _closure_size(perms, self.identity_index()) == self.order:
                return gens
            if len(gens) > 12:
                raise InconsistencyError(f"{self.name}: element list is not generated by random elements")

    def identity_index(self) -> int:
        n = self.elements.shape[1]
        return int(self.index_of(np.eye(n, dtype=np.int64)[None])[0])

    def class_count(self, seed: int = 0) -> int:
        perms = [self.conj_perm(g) for g in self.generators(seed)]
        return len(np.unique(_orbit_labels(perms, self.order)))

    def symmetric_count(self) -> int:
        return int((self.elements == np.swapaxes(self.elements, 1, 2)).all(axis=(1, 2)).sum())

    def census(self) -> GroupCensus:
        return GroupCensus(self.name, self.order, self.class_count(), self.symmetric_count())


def _encode(mats: np.ndarray, base: int) -> np.ndarray:
    flat = mats.reshape(mats.shape[0], -1)
    code = np.zeros(flat.shape[0], dtype=np.int64)
    for i in range(flat.shape[1]):
        code = code * base + flat[:, i]
    return code


def _closure_size(perms: list[np.ndarray], start: int) -> int:
    seen = np.zeros(len(perms[0]), dtype=bool)
    seen[start] = True
    frontier = np.array([start])
    while len(frontier):
        nxt = np.unique(np.concatenate([p[frontier] for p in perms]))
        nxt = nxt[~seen[nxt]]
        seen[nxt] = True
        frontier = nxt
    return int(seen.sum())


def _orbit_labels(perms: list[np.ndarray], size: int) -> np.ndarray:
    """Smallest index in each orbit of the group generated by ``perms``."""
    labels = np.arange(size)
    while True:
        old = labels
        for p in perms:
            labels = np.minimum(labels, labels[p])
            np.minimum.at(labels, p, labels.copy())
        labels = labels[labels]
        if np.array_equal(labels, old):
            return labels


# -- constructions ----------------------------------------------------------


def _hermitian(R: Ring, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """``sum conj(u_i) v_i`` for ``u`` of shape (a, n) against ``v`` of shape (b, n)."""
    acc = np.zeros((u.shape[0], v.shape[0]), dtype=np.int64)
    for i in range(u.shape[1]):
        acc = R.add[acc, R.mul[R.conj[u[:, i]][:, None], v[None, :, i]]]
    return acc


def unitary_elements(R: Ring, n: int) -> np.ndarray:
    """All ``A`` with ``A^* A = 1``, built column by column."""
    vecs = all_vectors(R, n)
    unit = vecs[np.diagonal(_hermitian(R, vecs, vecs)) == 1]
    partial = unit[:, None, :]  # (m, k, n): k columns so far
    for _ in range(1, n):
        ok = np.ones((partial.shape[0], unit.shape[0]), dtype=bool)
        for j in range(partial.shape[1]):
            ok &= _hermitian(R, partial[:, j, :], unit) == 0
        a, b = np.nonzero(ok)
        partial = np.concatenate([partial[a], unit[b][:, None, :]], axis=1)
    return np.swapaxes(partial, 1, 2).copy()


def linear_elements(R: Ring, n: int) -> np.ndarray:
    mats = all_vectors(R, n * n).reshape(-1, n, n)
    units = np.zeros(R.size, dtype=bool)
    units[R.units] = True
    return mats[units[det(R, mats)]]


def family_l1_elements(q: int, eps: int) -> tuple[Ring, np.ndarray]:
    """``H x| D`` inside 3x3 matrices: ``H`` unipotent, ``D = diag(a, b, a)``."""
    if eps == 1:
        R = finite_field(q)
        rows = [
            [[1, x, z], [0, 1, y], [0, 0, 1]] for x in range(q) for y in range(q) for z in range(q)
        ]
        scalars = R.units
    else:
        R = finite_field(q, 2)
        rows = []
        for x in range(R.size):
            target = int(R.mul[x, R.conj[x]])
            for z in range(R.size):
                if R.add[z, R.conj[z]] == target:
                    rows.append([[1, x, z], [0, 1, int(R.conj[x])], [0, 0, 1]])
        scalars = norm_one(R)
    H = np.array(rows, dtype=np.int64)
    D = np.array([np.diag([a, b, a]) for a in scalars for b in scalars], dtype=np.int64)
    return R, _all_products(R, H, D)


def family_211_elements(q: int, eps: int) -> tuple[Ring, np.ndarray]:
    """``E x| M`` inside 4x4 matrices: ``E`` a Heisenberg group, ``M = diag(a, B, a)``."""
    if eps == 1:
        R = finite_field(q)
        rows = []
        for r1 in range(q):
            for r2 in range(q):
                for s1 in range(q):
                    for s2 in range(q):
                        for c in range(q):
                            rows.append([[1, r1, r2, c], [0, 1, 0, s1], [0, 0, 1, s2], [0, 0, 0, 1]])
        scalars = R.units
        blocks = linear_elements(R, 2)
    else:
        R = finite_field(q, 2)
        rows = []
        for x in range(R.size):
            for y in range(R.size):
                target = int(R.add[R.mul[x, R.conj[x]], R.mul[y, R.conj[y]]])
                for c in range(R.size):
                    if R.add[c, R.conj[c]] == target:
                        rows.append(
                            [[1, x, y, c], [0, 1, 0, int(R.conj[x])], [0, 0, 1, int(R.conj[y])], [0, 0, 0, 1]]
                        )
        scalars = norm_one(R)
        blocks = unitary_elements(R, 2)
    E = np.array(rows, dtype=np.int64)
    M = []
    for a in scalars:
        for B in blocks:
            m = np.zeros((4, 4), dtype=np.int64)
            m[0, 0] = m[3, 3] = a
            m[1:3, 1:3] = B
            M.append(m)
    return R, _all_products(R, E, np.array(M, dtype=np.int64))


def _all_products(R: Ring, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    a = np.repeat(A, len(B), axis=0)
    b = np.tile(B, (len(A), 1, 1))
    return matmul(R, a, b)


def _is_prime(q: int) -> bool:
    return q > 1 and all(q % d for d in range(2, int(q**0.5) + 1))


@lru_cache(maxsize=None)
def make_group(kind: str, n: int, q: int, eps: int = 1) -> ExplicitGroup:
    """Build a supported group; ``eps`` only matters for the ``l1`` and ``211`` kinds."""
    sign = "GL" if eps == 1 else "GU"
    if kind == "gl" and 1 <= n <= 3 and q in (2, 3, 4, 5):
        p = 2 if q in (2, 4) else q
        R = finite_field(p, 1 if _is_prime(q) else 2)
        return ExplicitGroup(f"GL{n}(F{q})", R, linear_elements(R, n), Linear(n, 1, 1), q)
    if kind == "gu" and 1 <= n <= 3 and q in (2, 3):
        R = finite_field(q, 2)
        return ExplicitGroup(f"GU{n}(F{q})", R, unitary_elements(R, n), Linear(n, 1, -1), q)
    if kind == "gl-o2" and n == 2 and q in (2, 3):
        R = residue_ring(q)
        return ExplicitGroup(f"GL2(Z/{q * q})", R, linear_elements(R, 2), Linear(2, 2, 1), q)
    if kind == "gu-o2" and n == 2 and q in (2, 3):
        R = unramified_quadratic(q)
        return ExplicitGroup(f"GU2(o2,q={q})", R, unitary_elements(R, 2), Linear(2, 2, -1), q)
    if kind == "l1" and n == 3 and q in (2, 3) and eps in (1, -1):
        R, els = family_l1_elements(q, eps)
        return ExplicitGroup(f"{sign}-L1(2,q={q})", R, els, FamilyL1(2, eps), q)
    if kind == "211" and n == 4 and q == 2 and eps in (1, -1):
        R, els = family_211_elements(q, eps)
        return ExplicitGroup(f"{sign}-211(q={q})", R, els, Family211(eps), q)
    raise UnsupportedGroup(f"no explicit construction for kind={kind}, n={n}, q={q}, eps={eps}")


def group_census(group: ExplicitGroup) -> GroupCensus:
    return group.census()


def count_unitary_symmetric(n: int, q: int) -> int:
    """``#{A in GU_n(F_q) : A = A^t}``."""
    if n not in (1, 2, 3) or q not in (2, 3):
        raise UnsupportedGroup(f"no unitary symmetric count for n={n}, q={q}")
    return make_group("gu", n, q).symmetric_count()


def supported_groups() -> list[tuple[str, int, int, int]]:
    """The instances exercised by the oracle suite, as ``(kind, n, q, eps)``."""
    out = [("gl-o2", 2, q, 1) for q in (2, 3)] + [("gu-o2", 2, q, -1) for q in (2, 3)]
    out += [("l1", 3, q, e) for q in (2, 3) for e in (1, -1)]
    out += [("211", 4, 2, e) for e in (1, -1)]
    return out


__all__ = [
    "KINDS",
    "ExplicitGroup",
    "GroupCensus",
    "count_unitary_symmetric",
    "group_census",
    "make_group",
    "supported_groups",
]
