"""Command-line front end: ``repzeta {zeta,types,census,check,sym,special}``.

Exit codes: 0 success, 1 a check failed, 2 bad usage, 3 internal
inconsistency.  Data payloads are deterministic; census timings go to a
sidecar (``PATH.meta.json`` next to ``--out``, stderr otherwise).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .assembler import level_zeta, type_rows
from .checks import SUITES, run_suite
from .errors import InconsistencyError, RepZetaError
from .ennola import sym_count_poly
from .oracle.census import VARIANTS, census
from .zeta_core import ZetaSeries, special_value

FORMATS = ("json", "csv", "table")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(RepZetaError, ValueError):
    pass


def _sign(text: str) -> int:
    if text not in ("1", "+1", "-1"):
        raise argparse.ArgumentTypeError("epsilon must be 1 or -1")
    return int(text)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def _validate_nl(args) -> None:
    _require(1 <= args.n <= 4, "--n must be between 1 and 4")
    _require(args.level in (1, 2), "--level must be 1 or 2")


# -- rendering -------------------------------------------------------------


def _render(headers: list[str], rows: list[list[str]], fmt: str, payload) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    out = [line(headers), line(["-" * w for w in widths])]
    out += [line(r) for r in rows]
    return "\n".join(out) + "\n"


def _render_zeta(z: ZetaSeries, fmt: str) -> str:
    rows = [[str(t.mult), str(t.deg)] for t in z.terms]
    return _render(["multiplicity", "degree"], rows, fmt, z.to_json())


# -- commands ---------------------------------------------------------------


def cmd_zeta(args) -> tuple[str, int]:
    _validate_nl(args)
    return _render_zeta(level_zeta(args.n, args.level, args.epsilon), args.format), EXIT_OK


def cmd_types(args) -> tuple[str, int]:
    _require(1 <= args.n <= 4, "--n must be between 1 and 4")
    rows = type_rows(args.n, args.epsilon)
    table = [[r.t.text(), str(r.count), r.centralizer.text(), str(r.index)] for r in rows]
    payload = {"n": args.n, "epsilon": args.epsilon, "types": [r.to_json() for r in rows]}
    return _render(["type", "n_A", "centralizer", "index"], table, args.format, payload), EXIT_OK


def cmd_census(args) -> tuple[str, int]:
    _require(args.q is not None, "--q is required")
    res = census(args.n, args.q, args.variant, slow=args.slow)
    payload = res.to_json()
    meta = json.dumps(res.timing_json(), sort_keys=True) + "\n"
    if args.out:
        with open(args.out + ".meta.json", "w") as fh:
            fh.write(meta)
    else:
        sys.stderr.write(meta)
    rows = [[e["type"], str(e["classes"])] for e in payload["per_type"]]
    rows.append(["total", str(payload["total"])])
    return _render(["type", "classes"], rows, args.format, payload), EXIT_OK


def cmd_check(args) -> tuple[str, int]:
    report = run_suite(args.suite, slow=args.slow)
    payload = report.to_json()
    rows = [[r.status, r.name, r.detail] for r in report.results]
    return _render(["status", "check", "detail"], rows, args.format, payload), report.exit_code


def cmd_sym(args) -> tuple[str, int]:
    poly = sym_count_poly(args.n, args.level, args.epsilon)
    payload = {"n": args.n, "level": args.level, "epsilon": args.epsilon, "sym": poly.to_json(), "text": str(poly)}
    row = [str(args.n), str(args.level), str(args.epsilon), str(poly)]
    return _render(["n", "level", "epsilon", "sym"], [row], args.format, payload), EXIT_OK


def cmd_special(args) -> tuple[str, int]:
    _validate_nl(args)
    val = special_value(level_zeta(args.n, args.level, args.epsilon), args.s)
    payload = {
        "n": args.n,
        "level": args.level,
        "epsilon": args.epsilon,
        "s": args.s,
        "value": val.to_json(),
        "text": str(val),
    }
    row = [str(args.n), str(args.level), str(args.epsilon), str(args.s), str(val)]
    return _render(["n", "level", "epsilon", "s", "value"], [row], args.format, payload), EXIT_OK


COMMANDS = {
    "zeta": cmd_zeta,
    "types": cmd_types,
    "census": cmd_census,
    "check": cmd_check,
    "sym": cmd_sym,
    "special": cmd_special,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="repzeta", description="Representation zeta functions of GL_n and GU_n over length-2 rings."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *, n=True, level=False, eps=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        if n:
            p.add_argument("--n", type=int, required=True)
        if level:
            p.add_argument("--level", type=int, default=2)
        if eps:
            p.add_argument("--epsilon", type=_sign, default=1)
        return p

    add("zeta", "zeta series of G_n(o_l)", level=True, eps=True)
    add("types", "similarity-class types with n_A, centralizer and index", eps=True)
    p = add("census", "brute-force similarity-class census")
    p.add_argument("--q", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="gl")
    p.add_argument("--slow", action="store_true", help="allow censuses above two million matrices")
    p = add("check", "run verification suites", n=False)
    p.add_argument("--suite", choices=SUITES, default="symbolic")
    p.add_argument("--slow", action="store_true", help="include the n=4, q=3 census")
    add("sym", "number of symmetric matrices, as a polynomial", level=True, eps=True)
    p = add("special", "special value of the zeta series at an integer s", level=True, eps=True)
    p.add_argument("--s", type=int, default=-1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except InconsistencyError as exc:
        sys.stderr.write(f"repzeta: internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    except (RepZetaError, ValueError) as exc:
        sys.stderr.write(f"repzeta: {exc}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
