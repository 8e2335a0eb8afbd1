from __future__ import annotations

import pytest

from repzeta.checks import registry_specs
from repzeta.errors import UnsupportedSpec
from repzeta.polyq import ONE, Q
from repzeta.registry import (
    AbelianOfOrder,
    Family211,
    FamilyL1,
    Linear,
    Product,
    field_group_order,
    field_table_rows,
    order_of,
    zeta_of,
)
from repzeta.zeta_core import PROBE_QS, ZetaSeries, check_probe_integrality, product, special_value


def test_orders():
    q = Q
    assert order_of(Linear(2, 1, -1)) == q * (q + 1) * (q**2 - 1)
    assert order_of(Linear(2, 1, -1))(2) == 18
    assert order_of(FamilyL1(2, -1)) == q**3 * (q + 1) ** 2
    assert order_of(AbelianOfOrder(q**2 * (q**2 - 1))) == q**2 * (q**2 - 1)
    assert order_of(Family211(-1))(2) == 1728
    assert order_of(Family211(1))(2) == 192


@pytest.mark.parametrize("g", registry_specs(), ids=lambda g: f"{g.text()}:{g.eps}")
def test_sum_of_squares_is_the_order(g):
    z = zeta_of(g)
    assert special_value(z, -2) == order_of(g)
    assert not check_probe_integrality(z)
    for q in PROBE_QS:
        assert special_value(z, 0)(q) > 0


def test_gl2_field_table_at_q2_normalizes():
    z = zeta_of(Linear(2, 1, 1))
    merged = ZetaSeries.build([(m, d) for m, d in z.at(2)], 1).as_dict()
    assert merged == {ONE: 2, 2 * ONE: 1}


def test_product_zeta_is_product():
    a, b = Linear(1, 1, 1), FamilyL1(2, 1)
    assert zeta_of(Product((a, b)), 1).as_dict() == product(zeta_of(a, 1), zeta_of(b, 1)).as_dict()


def test_corrected_gl4_field_rows():
    q = Q
    for eps in (1, -1):
        degs = {d for _, d in field_table_rows(4, eps)}
        printed = {d for _, d in field_table_rows(4, eps, printed=True)}
        assert (q + eps) * (q**2 + 1) in degs
        assert (q + eps) * (q**3 + eps) in printed
        assert sum((m * d * d for m, d in field_table_rows(4, eps)), 0 * q) == field_group_order(4, eps)
        assert sum((m * d * d for m, d in field_table_rows(4, eps, printed=True)), 0 * q) != field_group_order(4, eps)


def test_gl4_f2_degrees():
    # GL4(F2) is isomorphic to A8; its character degrees are well known
    z = zeta_of(Linear(4, 1, 1))
    got = sorted(int(d) for m, d in z.at(2) for _ in range(int(m)))
    assert got == [1, 7, 14, 20, 21, 21, 21, 28, 35, 45, 45, 56, 64, 70]


def test_unsupported():
    with pytest.raises(UnsupportedSpec):
        order_of(Linear(5, 1, 1))
    with pytest.raises(UnsupportedSpec):
        zeta_of(FamilyL1(4, 1))
