from __future__ import annotations

import pytest

from repzeta.ennola import (
    check_duality,
    corollary_corp_fixture_check,
    corollary_cormain_check,
    pprime_cores,
    quotient_limit,
    sym_count_poly,
)
from repzeta.errors import UnsupportedCase
from repzeta.polyq import ONE, Q, ennola_transform
from repzeta.registry import Linear, order_of


@pytest.mark.parametrize("n, l, size", [(2, 1, 3), (2, 2, 4), (3, 1, 6), (3, 2, 8), (4, 1, 14), (4, 2, 19)])
def test_duality_holds(n, l, size):
    rep = check_duality(n, l)
    assert rep.holds
    assert len(rep.gl_cores) == len(rep.gu_cores) == len(rep.matched_pairs) == size
    covered = {a for a, _ in rep.matched_pairs} | {b for _, b in rep.matched_pairs}
    assert covered == rep.gl_cores | rep.gu_cores


def test_duality_n2_l1():
    rep = check_duality(2, 1)
    assert rep.gl_cores == {ONE, Q + 1, Q - 1}
    assert rep.gu_cores == {ONE, Q - 1, Q + 1}


def test_cores_divide_the_group_order():
    for l in (1, 2):
        for eps in (1, -1):
            group = Q ** (16 * (l - 1)) * order_of(Linear(4, 1, eps))
            for q in (2, 3, 4, 5):
                for g in pprime_cores(4, l, eps):
                    assert group(q) % g(q) == 0


@pytest.mark.parametrize("eps", (1, -1))
def test_listed_cores_that_are_not_degrees(eps):
    q, e = Q, eps
    reports = {(r.level, r.eps): r for r in corollary_corp_fixture_check()}
    l1, l2 = reports[(1, eps)], reports[(2, eps)]
    assert l1.only_listed == [(q + e) * (q**3 + e)]
    assert set(l1.only_computed) == {(q + e) * (q**2 + 1), (q + e) * (q**2 + 1) * (q**2 + e * q + 1)}
    assert set(l2.only_listed) == {(q + e) * (q**3 + e), (q**3 + e * q**2 + q + e) ** 2}
    assert l2.only_computed == [(q + e) * (q**2 + 1) * (q**2 + e * q + 1)]
    assert l1.explained and l2.explained
    assert len(l2.computed) == 19


def test_computed_pprime_sets_contain_listed_examples():
    q = Q
    assert (q**3 - 1) * (q**4 - 1) in pprime_cores(4, 2, 1)


def test_sym_count_polys():
    q = Q
    assert sym_count_poly(3, 1, -1) == q**6 + q**5 + q**3 + q**2
    assert sym_count_poly(3, 1, -1)(2) == 108
    assert sym_count_poly(4, 2, -1) * q**4 == (q + 1) * (q**3 + 1) * q**20
    assert sym_count_poly(4, 2, 1) * q**4 == (q - 1) * (q**3 - 1) * q**20
    with pytest.raises(UnsupportedCase):
        sym_count_poly(4, 1, 1)
    with pytest.raises(UnsupportedCase):
        sym_count_poly(3, 1, 1)


def test_special_value_identities():
    idents = corollary_cormain_check()
    assert len(idents) == 8
    for ident in idents:
        assert ident.holds, ident.name
    assert quotient_limit(1) == quotient_limit(-1) == 1


def test_ennola_pairs_are_transforms():
    for a, b in check_duality(4, 2).matched_pairs:
        assert ennola_transform(a) == b
