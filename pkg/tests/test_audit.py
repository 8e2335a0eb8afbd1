from __future__ import annotations

import dataclasses

import pytest

from repzeta import audit
from repzeta.audit import STATUSES, audit_json, audit_tables, erratum_certificates
from repzeta.fixtures import ERRATA, TYPE_TABLES, used_type
from repzeta.polyq import Q

SIGNS = (1, -1)


@pytest.mark.parametrize("eps", SIGNS)
def test_every_row_audited_once(eps):
    rows = audit_tables(eps)
    assert len(rows) == sum(len(t) for t in TYPE_TABLES.values()) == 34
    assert len({r.key for r in rows}) == len(rows)
    assert all(r.status in STATUSES for r in rows)


@pytest.mark.parametrize("eps", SIGNS)
def test_only_errata_rows_differ(eps):
    off = {r.key: set(r.differing) for r in audit_tables(eps) if r.status != "match"}
    assert set(off) == set(ERRATA)
    for key, fields in off.items():
        assert fields <= ERRATA[key].fields
    assert not [r for r in audit_tables(eps) if r.status == "mismatch"]


def test_documented_errata():
    assert {k for k, e in ERRATA.items() if e.documented} == {("n3", 5), ("n4", 13)}


@pytest.mark.parametrize("eps", SIGNS)
def test_certificates_hold(eps):
    certs = erratum_certificates(eps)
    assert len(certs) == 5
    assert all(c.holds for c in certs), [c.name for c in certs if not c.holds]


def test_symbol_correction_names_a_fresh_type():
    for rows in TYPE_TABLES.values():
        types = [used_type(r) for r in rows]
        assert len(set(types)) == len(types)


def test_unexplained_difference_is_a_mismatch(monkeypatch):
    rows = list(TYPE_TABLES[2])
    rows[1] = dataclasses.replace(rows[1], index=lambda q, e: q**2 + 1)
    monkeypatch.setitem(audit.TYPE_TABLES, 2, rows)
    bad = [r for r in audit_tables(1) if r.status == "mismatch"]
    assert [(r.key, r.differing) for r in bad] == [(("n2", 2), ("index",))]


def test_erratum_does_not_cover_other_cells(monkeypatch):
    rows = list(TYPE_TABLES[3])
    i = next(k for k, r in enumerate(rows) if r.key == ("n3", 4))
    old = rows[i].n_a
    rows[i] = dataclasses.replace(rows[i], n_a=lambda q, e: old(q, e) + Q)
    monkeypatch.setitem(audit.TYPE_TABLES, 3, rows)
    row = next(r for r in audit_tables(1) if r.key == ("n3", 4))
    assert row.status == "mismatch"
    assert set(row.differing) == {"n_A", "index"}


def test_audit_json_shape():
    data = audit_json(-1)
    assert data["epsilon"] == -1
    assert len(data["rows"]) == 34
    assert {"table", "row", "status", "differing", "notes"} <= set(data["rows"][0])
    assert all(c["holds"] for c in data["certificates"])
