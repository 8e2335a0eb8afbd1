from __future__ import annotations

import pytest

from repzeta.errors import UnsupportedGroup
from repzeta.oracle.groups import count_unitary_symmetric, group_census, make_group, supported_groups
from repzeta.registry import order_of, zeta_of
from repzeta.zeta_core import special_value


@pytest.mark.parametrize("kind, n, q, eps", supported_groups())
def test_explicit_groups_match_zeta(kind, n, q, eps):
    g = make_group(kind, n, q, eps)
    c = group_census(g)
    z = zeta_of(g.spec, eps)
    assert c.order == order_of(g.spec)(q)
    assert c.classes == special_value(z, 0)(q)


@pytest.mark.parametrize(
    "kind, n, q, expected",
    [
        ("gu-o2", 2, 2, (288, 42)),
        ("gl-o2", 2, 2, (96, 14)),
        ("gl-o2", 2, 3, (3888, 78)),
        ("gu-o2", 2, 3, (7776, 156)),
        ("gl", 3, 2, (168, 6)),
        ("gu", 3, 2, (648, 24)),
        ("gu", 2, 2, (18, 9)),
    ],
)
def test_known_orders_and_class_numbers(kind, n, q, expected):
    c = make_group(kind, n, q, -1 if kind.startswith("gu") else 1).census()
    assert (c.order, c.classes) == expected


def test_family_orders():
    assert make_group("l1", 3, 2, 1).order == 8
    assert make_group("l1", 3, 3, 1).order == 108
    assert make_group("l1", 3, 2, -1).order == 72
    assert make_group("l1", 3, 3, -1).order == 432
    assert make_group("211", 4, 2, -1).order == 1728
    assert make_group("211", 4, 2, 1).order == 192


def test_symmetric_counts():
    assert make_group("gl", 3, 2).symmetric_count() == 28
    assert make_group("gu", 3, 2).symmetric_count() == 108
    assert count_unitary_symmetric(2, 2) == 12
    assert count_unitary_symmetric(3, 2) == 108
    assert count_unitary_symmetric(3, 3) == 1008


FIELD_GROUPS = [("gl", 2, 2), ("gl", 2, 3), ("gl", 3, 2), ("gl", 3, 3), ("gu", 2, 2), ("gu", 2, 3), ("gu", 3, 2)]


@pytest.mark.parametrize("kind, n, q", FIELD_GROUPS)
def test_symmetric_elements_equal_degree_sum(kind, n, q):
    g = make_group(kind, n, q)
    assert g.symmetric_count() == special_value(zeta_of(g.spec), -1)(q)


def test_unsupported():
    with pytest.raises(UnsupportedGroup):
        make_group("gu-o2", 3, 2)
    with pytest.raises(UnsupportedGroup):
        make_group("211", 4, 3, 1)
    with pytest.raises(UnsupportedGroup):
        count_unitary_symmetric(4, 2)
