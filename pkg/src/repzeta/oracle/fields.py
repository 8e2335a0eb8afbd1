"""Small finite rings with table arithmetic.

Every ring here has at most a few hundred elements, encoded as integers
``0 .. size-1`` with ``0`` the zero and ``1`` the identity.  Addition,
multiplication, negation and (where present) the conjugation involution are
precomputed as numpy tables, so the same code multiplies single elements and
whole arrays of elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

# Fixed defining polynomials, coefficients low degree first (monic, implicit
# leading 1 omitted): F_4, F_9, F_16, F_25.
MODULI = {
    (2, 2): (1, 1),  # x^2 + x + 1
    (3, 2): (1, 0),  # x^2 + 1
    (2, 4): (1, 1, 0, 0),  # x^4 + x + 1
    (5, 2): (2, 0),  # x^2 + 2
}


@dataclass(eq=False)
class Ring:
    """A finite commutative ring given by its operation tables."""

    name: str
    size: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    conj: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.units = np.flatnonzero((self.mul == 1).any(axis=1))
        inv = np.full(self.size, -1, dtype=np.int64)
        for a in self.units:
            inv[a] = int(np.flatnonzero(self.mul[a] == 1)[0])
        self.inv = inv

    def __repr__(self) -> str:
        return f"Ring({self.name})"

    @property
    def is_field(self) -> bool:
        return len(self.units) == self.size - 1

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def pow(self, a: int, k: int) -> int:
        r = 1
        for _ in range(k):
            r = int(self.mul[r, a])
        return r


def _prime_field(p: int) -> Ring:
    a = np.arange(p)
    return Ring(
        f"F{p}",
        p,
        (a[:, None] + a[None, :]) % p,
        (a[:, None] * a[None, :]) % p,
        (-a) % p,
        meta={"p": p, "k": 1},
    )


def _polymul_mod(x, y, p, modulus):
    k = len(modulus)
    prod_ = [0] * (2 * k - 1)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            prod_[i + j] = (prod_[i + j] + a * b) % p
    # reduce with x^k = -(m_0 + m_1 x + ... )
    for d in range(2 * k - 2, k - 1, -1):
        c = prod_[d]
        if c:
            prod_[d] = 0
            for i, m in enumerate(modulus):
                prod_[d - k + i] = (prod_[d - k + i] - c * m) % p
    return tuple(prod_[:k])


def _encode(vec, p) -> int:
    return sum(c * p**i for i, c in enumerate(vec))


def _decode(x, p, k):
    return tuple((x // p**i) % p for i in range(k))


@lru_cache(maxsize=None)
def finite_field(p: int, k: int = 1) -> Ring:
    """``F_{p^k}`` with the fixed modulus; the element ``x`` of the prime field is ``x``."""
    if k == 1:
        return _prime_field(p)
    modulus = MODULI.get((p, k))
    if modulus is None:
        raise ValueError(f"no fixed modulus for F_{p}^{k}")
    size = p**k
    vecs = [_decode(x, p, k) for x in range(size)]
    add = np.array([[_encode(tuple((a + b) % p for a, b in zip(u, v)), p) for v in vecs] for u in vecs])
    mul = np.array([[_encode(_polymul_mod(u, v, p, modulus), p) for v in vecs] for u in vecs])
    neg = np.array([_encode(tuple((-a) % p for a in u), p) for u in vecs])
    ring = Ring(f"F{size}", size, add, mul, neg, meta={"p": p, "k": k, "modulus": modulus})
    if ring.is_field is False:
        raise AssertionError(f"modulus {modulus} is reducible over F_{p}")
    if k % 2 == 0:
        # conjugation of F_{Q^2} over F_Q is a -> a^Q
        Qh = p ** (k // 2)
        ring.conj = np.array([ring.pow(a, Qh) for a in range(size)])
    return ring


@lru_cache(maxsize=None)
def residue_ring(p: int) -> Ring:
    """``o_2 = Z/p^2``; reduction to ``F_p`` is ``x mod p``."""
    m = p * p
    a = np.arange(m)
    return Ring(
        f"Z/{m}",
        m,
        (a[:, None] + a[None, :]) % m,
        (a[:, None] * a[None, :]) % m,
        (-a) % m,
        conj=a.copy(),
        meta={"p": p, "reduce": a % p},
    )


@lru_cache(maxsize=None)
def unramified_quadratic(p: int) -> Ring:
    """``O_2``, the unramified quadratic extension of ``Z/p^2``.

    Elements ``a + b*w`` (``a, b`` in ``Z/p^2``) encode as ``a + p^2 * b``.
    For odd ``p``, ``w^2 = rho`` with ``rho`` a non-square unit and conjugation
    ``w -> -w``.  For ``p = 2`` every unit of ``Z/4`` is a square mod 2, so
    ``w^2 + w + 1 = 0`` is used instead, with conjugation ``w -> -1 - w``.
    For ``p in {2, 3}`` reduction mod ``p`` lands in ``finite_field(p, 2)``
    with ``w -> x``.
    """
    m = p * p
    if p == 2:
        # w^2 = -1 - w
        def mulp(x, y):
            a, b = x
            c, d = y
            bd = b * d
            return ((a * c - bd) % m, (a * d + b * c - bd) % m)

        def conjp(x):
            a, b = x
            return ((a - b) % m, (-b) % m)

        rho = None
    else:
        rho = _rho(p)

        def mulp(x, y):
            a, b = x
            c, d = y
            return ((a * c + rho * b * d) % m, (a * d + b * c) % m)

        def conjp(x):
            a, b = x
            return (a, (-b) % m)

    pairs = [(x % m, x // m) for x in range(m * m)]
    enc = lambda t: t[0] + m * t[1]  # noqa: E731
    add = np.array([[enc(((a + c) % m, (b + d) % m)) for (c, d) in pairs] for (a, b) in pairs])
    mul = np.array([[enc(mulp(u, v)) for v in pairs] for u in pairs])
    neg = np.array([enc(((-a) % m, (-b) % m)) for (a, b) in pairs])
    conj = np.array([enc(conjp(u)) for u in pairs])
    reduce = np.array([(a % p) + p * (b % p) for (a, b) in pairs])
    return Ring(
        f"O2(p={p})",
        m * m,
        add,
        mul,
        neg,
        conj=conj,
        meta={"p": p, "rho": rho, "reduce": reduce},
    )


def _rho(p: int) -> int:
    """The non-square unit defining ``O_2``: ``-1`` for ``p = 3``, else the least non-square."""
    if p == 3:
        return p * p - 1
    squares = {(x * x) % p for x in range(1, p)}
    return next(r for r in range(2, p) if r not in squares)


def trace_zero(ring: Ring) -> np.ndarray:
    """Elements with ``a + conj(a) = 0`` (the diagonal entries of anti-hermitian matrices)."""
    a = np.arange(ring.size)
    return a[ring.add[a, ring.conj[a]] == 0]


def norm_one(ring: Ring) -> np.ndarray:
    a = np.arange(ring.size)
    return a[ring.mul[a, ring.conj[a]] == 1]


def all_vectors(ring: Ring, n: int) -> np.ndarray:
    """Every vector of length ``n`` over ``ring``, shape ``(size**n, n)``."""
    return np.array(list(product(range(ring.size), repeat=n)), dtype=np.int64).reshape(-1, n)
