from __future__ import annotations

import json

import pytest

from repzeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zeta_table(capsys):
    code, out, _ = run(capsys, "zeta", "--n", "2", "--level", "1", "--epsilon", "1")
    assert code == 0
    assert out.splitlines()[0].split() == ["multiplicity", "degree"]
    assert len(out.splitlines()) == 2 + 4


def test_zeta_json_level2(capsys):
    code, out, _ = run(capsys, "zeta", "--n", "4", "--level", "2", "--epsilon", "-1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["epsilon"] == -1 and data["terms"]


@pytest.mark.parametrize(
    "argv",
    [
        ("zeta", "--n", "5"),
        ("zeta", "--n", "2", "--level", "3"),
        ("zeta", "--n", "2", "--epsilon", "2"),
        ("sym", "--n", "4", "--level", "1"),
        ("census", "--n", "4", "--q", "3"),
        ("bogus",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_types(capsys):
    code, out, _ = run(capsys, "types", "--n", "4", "--format", "csv")
    assert code == 0
    assert len(out.strip().splitlines()) == 1 + 22


def test_census_sidecar(tmp_path, capsys):
    out = tmp_path / "c.json"
    argv = ["census", "--n", "3", "--q", "2", "--variant", "gu", "--format", "json", "--out", str(out)]
    code, _, _ = run(capsys, *argv)
    assert code == 0
    data = json.loads(out.read_text())
    assert data["variant"] == "gu" and data["total"] == 14
    meta = json.loads((tmp_path / "c.json.meta.json").read_text())
    assert "elapsed_ms" in meta


def test_output_is_byte_stable(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(["zeta", "--n", "3", "--level", "2", "--epsilon", "-1", "--format", "json", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_special_and_sym(capsys):
    argv = ("special", "--n", "4", "--level", "2", "--epsilon", "-1", "--s", "-1", "--format", "json")
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out)["text"].startswith("q^20")
    code, out, _ = run(capsys, "sym", "--n", "3", "--level", "1", "--epsilon", "-1", "--format", "json")
    assert json.loads(out)["text"] == "q^6 + q^5 + q^3 + q^2"


def test_check_symbolic(capsys):
    code, out, _ = run(capsys, "check", "--suite", "symbolic", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["failed"] == 0
    assert data["overrides"] > 0


def test_inconsistency_exit_3(capsys, monkeypatch):
    from repzeta import cli
    from repzeta.errors import NotDivisible
    from repzeta.polyq import Q

    def boom(*args, **kwargs):
        raise NotDivisible(Q, Q + 1, Q, "test")

    monkeypatch.setattr(cli, "level_zeta", boom)
    code, _, err = run(capsys, "zeta", "--n", "2")
    assert code == 3
    assert "inconsistency" in err
