from __future__ import annotations

import numpy as np
import pytest

from repzeta.oracle.fields import finite_field, norm_one, residue_ring, trace_zero, unramified_quadratic


@pytest.mark.parametrize("p, k", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 4), (5, 2)])
def test_fields_are_fields(p, k):
    F = finite_field(p, k)
    assert F.size == p**k and F.is_field
    a = np.arange(F.size)
    assert (F.add[a, F.neg[a]] == 0).all()
    assert (F.mul[F.mul[a[:, None], a[None, :]][:, :, None], a[None, None, :]] ==
            F.mul[a[:, None, None], F.mul[a[:, None], a[None, :]][None, :, :]]).all()


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_conjugation_on_quadratic_extension(q):
    F = finite_field(2 if q in (2, 4) else q, 2 if q in (2, 3, 5) else 4)
    a = np.arange(F.size)
    assert (F.conj[F.conj[a]] == a).all()
    assert (F.conj[F.mul[a[:, None], a[None, :]]] == F.mul[F.conj[a][:, None], F.conj[a][None, :]]).all()
    assert len(trace_zero(F)) == q
    assert len(norm_one(F)) == q + 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_length_two_rings(p):
    o = residue_ring(p)
    assert len(o.units) == p * (p - 1)
    O = unramified_quadratic(p)
    assert len(O.units) == p**2 * (p**2 - 1)
    assert len(norm_one(O)) == p * (p + 1)
    assert len(trace_zero(O)) == p**2
    a = np.arange(O.size)
    assert (O.conj[O.conj[a]] == a).all()
    assert (O.conj[O.mul[a[:, None], a[None, :]]] == O.mul[O.conj[a][:, None], O.conj[a][None, :]]).all()


@pytest.mark.parametrize("p", [2, 3])
def test_reduction_is_a_ring_map(p):
    O = unramified_quadratic(p)
    F = finite_field(p, 2)
    r = O.meta["reduce"]
    a = np.arange(O.size)
    assert (r[O.add[a[:, None], a[None, :]]] == F.add[r[a][:, None], r[a][None, :]]).all()
    assert (r[O.mul[a[:, None], a[None, :]]] == F.mul[r[a][:, None], r[a][None, :]]).all()
    assert (r[O.conj[a]] == F.conj[r[a]]).all()


def test_rho_choice():
    assert unramified_quadratic(3).meta["rho"] == 8
    assert unramified_quadratic(5).meta["rho"] == 2
