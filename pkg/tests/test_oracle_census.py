from __future__ import annotations

import numpy as np
import pytest

from repzeta.errors import TooLarge, UnsupportedCase
from repzeta.oracle.census import _Space, census
from repzeta.oracle.classify import charpoly_is_self_dual
from repzeta.oracle.fields import finite_field
from repzeta.oracle.linalg import charpoly, conj_transpose
from repzeta.typesys import TypeSymbol, class_count, enumerate_types

GL_CASES = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2)]
GU_CASES = [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]


def _expected(n, q):
    return {t: int(class_count(t)(q)) for t in enumerate_types(n)}


@pytest.mark.parametrize("n, q", GL_CASES)
def test_gl_census_matches_class_counts(n, q):
    res = census(n, q, "gl")
    assert {t: res.per_type.get(t, 0) for t in enumerate_types(n)} == _expected(n, q)


@pytest.mark.parametrize("n, q", GU_CASES)
def test_gu_census_matches_class_counts(n, q):
    res = census(n, q, "gu")
    assert {t: res.per_type.get(t, 0) for t in enumerate_types(n)} == _expected(n, q)


def test_gl2_f2_census():
    res = census(2, 2, "gl")
    assert res.per_type == {
        TypeSymbol.of((1, (1, 1))): 2,
        TypeSymbol.of((1, (2,))): 2,
        TypeSymbol.of((1, (1,)), (1, (1,))): 1,
        TypeSymbol.of((2, (1,))): 1,
    }
    assert res.total == 6


def test_gl3_f2_has_no_three_eigenvalue_classes():
    res = census(3, 2, "gl")
    assert TypeSymbol.of((1, (1,)), (1, (1,)), (1, (1,))) not in res.per_type
    assert sorted(res.per_type.values()) == [2] * 7


def test_census_json_is_deterministic():
    a, b = census(3, 2, "gu").to_json(), census(3, 2, "gu").to_json()
    assert a == b
    assert "elapsed_ms" not in a
    assert a["total"] == sum(e["classes"] for e in a["per_type"])


def test_limits():
    with pytest.raises(TooLarge):
        census(4, 3, "gl")
    with pytest.raises(TooLarge):
        census(4, 5, "gl", slow=True)
    with pytest.raises(UnsupportedCase):
        census(2, 6, "gl")
    with pytest.raises(ValueError):
        census(2, 2, "sp")


@pytest.mark.parametrize("n, q", GU_CASES)
def test_every_anti_hermitian_matrix_has_self_dual_charpoly(n, q):
    F = finite_field(q, 2)
    space = _Space(F, n, "gu")
    M = space.decode(0, space.size)
    assert space.size == q ** (n * n)
    assert (conj_transpose(F, M) == F.neg[M]).all()
    assert charpoly_is_self_dual(F, charpoly(F, M)).all()


def test_self_dual_condition_detects_non_anti_hermitian():
    F4 = finite_field(2, 2)
    A = np.array([[[2, 0], [0, 0]]])  # trace w, not in the trace-zero set
    assert not charpoly_is_self_dual(F4, charpoly(F4, A)).all()


def test_threaded_census_agrees(monkeypatch):
    monkeypatch.setenv("ZETA_THREADS", "2")
    threaded = census(3, 3, "gl", chunk=4096)
    monkeypatch.setenv("ZETA_THREADS", "1")
    assert threaded.per_type == census(3, 3, "gl").per_type


@pytest.mark.slow
def test_gl4_f3_census():
    res = census(4, 3, "gl", slow=True)
    assert {t: res.per_type.get(t, 0) for t in enumerate_types(4)} == _expected(4, 3)
    assert res.elapsed_ms < 15 * 60 * 1000
