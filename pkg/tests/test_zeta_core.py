from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repzeta.polyq import ONE, Q
from repzeta.zeta_core import (
    PROBE_QS,
    ZetaSeries,
    check_probe_integrality,
    merge,
    pprime_degree_set,
    product,
    scale_degrees,
    special_value,
)


def test_build_merges_equal_degrees_and_drops_zeros():
    z = ZetaSeries.build([(Q, ONE), (1, ONE), (Q - Q, Q + 1)], 1)
    assert z.as_dict() == {ONE: Q + 1}


def test_epsilon_must_be_a_sign():
    with pytest.raises(ValueError):
        ZetaSeries.build([], 0)


def test_special_values_of_gl2_field():
    q = Q
    z = ZetaSeries.build([(q - 1, 1), (q * (q - 1) / 2, q - 1), (q - 1, q), ((q - 1) * (q - 2) / 2, q + 1)], 1)
    assert special_value(z, 0) == q**2 - 1
    assert special_value(z, -2) == q * (q - 1) * (q**2 - 1)
    with pytest.raises(ValueError):
        special_value(z, 1)


def test_product_and_scaling():
    a = ZetaSeries.build([(2, ONE), (1, Q)], 1)
    b = ZetaSeries.build([(1, ONE), (3, Q)], 1)
    p = product(a, b)
    assert special_value(p, -2) == special_value(a, -2) * special_value(b, -2)
    s = scale_degrees(a, Q)
    assert s.as_dict() == {Q: 2, Q**2: 1}
    assert merge(a, b).as_dict() == {ONE: 3, Q: 4}


def test_product_rejects_mixed_signs():
    with pytest.raises(ValueError):
        product(ZetaSeries.trivial(1), ZetaSeries.trivial(-1))


def test_pprime_cores():
    z = ZetaSeries.build([(1, ONE), (1, Q**2 * (Q + 1)), (1, Q * (Q + 1))], -1)
    assert pprime_degree_set(z) == {ONE, Q + 1}


def test_probe_integrality_flags_bad_terms():
    assert check_probe_integrality(ZetaSeries.build([(Q / 2, Q)], 1))
    assert check_probe_integrality(ZetaSeries.build([(Q - 3, Q)], 1))  # negative at q=2
    assert not check_probe_integrality(ZetaSeries.build([(Q * (Q - 1) / 2, Q + 1)], 1))
    assert PROBE_QS == (2, 3, 4, 5, 7, 8, 9, 11, 13)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(1, 4)), max_size=6))
def test_json_round_trip(pairs):
    z = ZetaSeries.build([(m, Q**d) for m, d in pairs], 1, "x")
    assert ZetaSeries.from_json(z.to_json()) == z
