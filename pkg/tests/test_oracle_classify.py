from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repzeta.oracle.classify import (
    ClassInvariant,
    charpoly_is_self_dual,
    classify,
    classify_batch,
    dual_poly,
    factor,
    gl_type,
    gu_type,
)
from repzeta.oracle.fields import finite_field
from repzeta.oracle.linalg import charpoly, det, matmul, rank_field
from repzeta.typesys import TypeSymbol

F2 = finite_field(2)


def test_zero_matrix():
    assert classify([[0, 0], [0, 0]], F2) == ClassInvariant((((0,), (1, 1)),))


def test_irreducible_companion():
    # t^2 + t + 1 over F_2
    assert classify([[0, 1], [1, 1]], F2) == ClassInvariant((((1, 1), (1,)),))


def test_jordan_block():
    # t - 1 is t + 1 over F_2: coefficient tuple (1,)
    assert classify([[1, 1], [0, 1]], F2) == ClassInvariant((((1,), (2,)),))


def test_mixed_jordan_structure():
    F3 = finite_field(3)
    A = np.zeros((4, 4), dtype=int)
    A[0, 1] = 1  # nilpotent block of size 2 at 0
    A[2, 2] = A[3, 3] = 2
    inv = classify(A, F3)
    assert inv == ClassInvariant(tuple(sorted([((0,), (2,)), ((1,), (1, 1))])))
    assert gl_type(inv) == TypeSymbol.of((1, (2,)), (1, (1, 1)))


def test_factorization():
    F3 = finite_field(3)
    # t^4 - 1 = (t - 1)(t + 1)(t^2 + 1) over F_3
    facs = dict(factor(F3, (2, 0, 0, 0)))
    assert facs == {(2,): 1, (1,): 1, (1, 0): 1}
    # t^4 + t + 1 is irreducible over F_2
    assert factor(F2, (1, 1, 0, 0)) == (((1, 1, 0, 0), 1),)


def test_batched_linear_algebra():
    F5 = finite_field(5)
    rng = np.random.default_rng(1)
    M = rng.integers(0, 5, size=(200, 3, 3))
    assert (det(F5, M) == np.round(np.linalg.det(M)).astype(int) % 5).all()
    assert (matmul(F5, M, M) == (M @ M) % 5).all()
    cp = charpoly(F5, M)
    assert (cp[:, 0] == (-det(F5, M)) % 5).all()
    F4 = finite_field(2, 2)
    N = rng.integers(0, 4, size=(200, 3, 3))
    r = rank_field(F4, N)
    assert ((r == 3) == (det(F4, N) != 0)).all()


def test_gu_types_from_dual_pairs():
    F4 = finite_field(2, 2)
    # over F_4 the factor t + w is paired with t + w^2 under the duality
    w = 2
    assert dual_poly(F4, (w,)) == (int(F4.conj[w]),)
    inv = ClassInvariant(tuple(sorted([((w,), (1,)), ((int(F4.conj[w]),), (1,))])))
    assert gu_type(F4, inv) == TypeSymbol.of((2, (1,)))
    assert gu_type(F4, ClassInvariant((((1,), (2,)),))) == TypeSymbol.of((1, (2,)))


def _invertible(field, n, seed):
    rng = np.random.default_rng(seed)
    while True:
        P = rng.integers(0, field.size, size=(n, n))
        if det(field, P[None])[0] != 0:
            return P


def _inverse(field, P):
    n = P.shape[0]
    aug = np.concatenate([P, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        r = next(i for i in range(c, n) if aug[i, c] != 0)
        aug[[c, r]] = aug[[r, c]]
        aug[c] = field.mul[aug[c], field.inv[aug[c, c]]]
        for i in range(n):
            if i != c and aug[i, c]:
                aug[i] = field.add[aug[i], field.neg[field.mul[aug[i, c], aug[c]]]]
    return aug[:, n:]


CONFIGS = [(2, 2, 1), (3, 2, 1), (4, 2, 1), (3, 3, 1), (4, 3, 1), (2, 2, 2), (3, 3, 2), (2, 5, 1)]


@pytest.mark.parametrize("n, p, k", CONFIGS)
@settings(max_examples=1000, deadline=None)
@given(data=st.data())
def test_classify_is_conjugation_invariant(n, p, k, data):
    field = finite_field(p, k)
    seed = data.draw(st.integers(0, 2**32 - 1))
    A = np.random.default_rng(seed).integers(0, field.size, size=(n, n))
    P = _invertible(field, n, seed + 1)
    B = matmul(field, matmul(field, P, A[None]), _inverse(field, P))[0]
    assert classify(B, field) == classify(A, field)


def test_classify_batch_matches_single():
    F3 = finite_field(3)
    M = np.random.default_rng(3).integers(0, 3, size=(50, 3, 3))
    assert classify_batch(F3, M) == [classify(A, F3) for A in M]


def test_self_dual_check_on_anti_hermitian_matrix():
    F9 = finite_field(3, 2)
    A = np.array([[0, 1, 2], [0, 3, 5], [0, 0, 6]])
    for i in range(3):
        for j in range(i):
            A[i, j] = F9.neg[F9.conj[A[j, i]]]
    assert charpoly_is_self_dual(F9, charpoly(F9, A[None])).all()
