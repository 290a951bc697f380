"""Command-line front end; a thin client over the core modules.

Exit codes: 0 success, 1 validation/usage error, 2 engine disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import counting, dyck, mesas, render, stirling
from .errors import StirlingMesasError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISAGREE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling-mesas",
        description="Mesa sets of Stirling permutations: statistics, "
        "admissibility, counting, and rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("json", "csv", "plain"),
            default="plain",
            help="output format (default: plain)",
        )

    p = sub.add_parser("check", help="admissibility of a candidate mesa set")
    p.add_argument("set", help="comma-separated values, e.g. 3,4,5")
    p.add_argument("--order", type=int, default=None, help="context order")
    add_format(p)

    p = sub.add_parser("mesa", help="validate a word, report mesas and minima")
    p.add_argument("word", help="digit string, or comma-separated above order 9")
    add_format(p)

    p = sub.add_parser("count", help="count admissible mesa sets at one order")
    p.add_argument("n", type=int)
    p.add_argument(
        "--engines",
        default=",".join(counting.ENGINE_NAMES),
        help="comma-separated subset of: " + ",".join(counting.ENGINE_NAMES),
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=None)
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--corrupt-engine", default=None, help=argparse.SUPPRESS)
    add_format(p)

    p = sub.add_parser("list", help="enumerate admissible mesa sets")
    p.add_argument("n", type=int)
    add_format(p)

    p = sub.add_parser("maximal", help="maximal sets at order 3k-1 with paths")
    p.add_argument("k", type=int)
    add_format(p)

    p = sub.add_parser("dyck", help="analyze an N/E lattice path")
    p.add_argument("path", help="step string over N and E")
    add_format(p)

    p = sub.add_parser("table", help="counts for orders 1..n_max, all fast engines")
    p.add_argument("n_max", type=int)
    add_format(p)

    p = sub.add_parser("render", help="emit an SVG figure")
    p.add_argument("kind", choices=("perm", "dyck"))
    p.add_argument("input", help="word (perm) or N/E step string (dyck)")
    p.add_argument("-o", "--output", required=True, help="output SVG file")
    p.add_argument("--cell", type=int, default=24)

    return parser


def _parse_set(text: str) -> List[int]:
    text = text.strip()
    if text in ("", "{}", "-"):
        return []
    return [int(piece) for piece in text.strip("{}").split(",")]


def _emit(args, payload: dict, plain: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(_csv_cell(payload[k]) for k in keys))
    else:
        print(plain)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple, set)):
        return " ".join(str(v) for v in sorted(value))
    return str(value)


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _cmd_check(args) -> int:
    elements = _parse_set(args.set)
    M = mesas.make_mesa_set(elements, context_order=args.order)
    admissible = mesas.is_admissible(M)
    witness = str(mesas.canonical_witness(M)) if admissible else None
    payload = {
        "set": list(M.elements),
        "order": M.context_order,
        "admissible": admissible,
        "witness": witness,
    }
    if admissible:
        plain = f"admissible; canonical witness: {witness}"
    else:
        plain = "not admissible"
    _emit(args, payload, plain)
    return EXIT_OK


def _cmd_mesa(args) -> int:
    w = stirling.validate_stirling(stirling.parse_word(args.word))
    mesa = stirling.mesa_set(w)
    minima = stirling.local_minima(w)
    payload = {
        "word": list(w.word),
        "order": w.order,
        "mesas": sorted(mesa),
        "local_minima": sorted(minima),
    }
    plain = (
        f"word: {w}\norder: {w.order}\n"
        f"mesas: {_fmt_set(mesa)}\nlocal minima: {_fmt_set(minima)}"
    )
    _emit(args, payload, plain)
    return EXIT_OK


def _report_plain(report: counting.CountReport) -> str:
    parts = [f"n={report.order}"]
    for name in counting.ENGINE_NAMES:
        value = getattr(report, f"{name}_count")
        if value is not None:
            parts.append(f"{name}={value}")
    if report.maximal_count is not None:
        parts.append(f"maximal={report.maximal_count}")
    parts.append(f"agree={str(report.agree).lower()}")
    return "  ".join(parts)


def _cmd_count(args) -> int:
    engines = [e for e in args.engines.split(",") if e]
    report = counting.full_report(
        args.n,
        engines,
        ceiling=args.ceiling,
        allow_large=args.allow_large,
        workers=args.workers,
        corrupt=args.corrupt_engine,
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(counting.CSV_HEADER)
        print(report.to_csv_row())
    else:
        print(_report_plain(report))
    if not report.agree:
        print("engine disagreement detected", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _cmd_list(args) -> int:
    sets = list(counting.enumerate_ams(args.n))
    if args.format == "json":
        print(json.dumps([list(M.elements) for M in sets]))
    elif args.format == "csv":
        print("elements")
        for M in sets:
            print(" ".join(str(v) for v in M.elements))
    else:
        for M in sets:
            print(M)
        print(f"total: {len(sets)}")
    return EXIT_OK


def _cmd_maximal(args) -> int:
    rows = []
    for M in counting.enumerate_maximal(args.k):
        rows.append((M, dyck.delta(M)))
    if args.format == "json":
        print(
            json.dumps(
                [{"set": list(M.elements), "path": str(p)} for M, p in rows]
            )
        )
    elif args.format == "csv":
        print("elements,path")
        for M, p in rows:
            print(f"{' '.join(str(v) for v in M.elements)},{p}")
    else:
        for M, p in rows:
            print(f"{M}  ->  {p}")
        print(f"total: {len(rows)}")
    return EXIT_OK


def _cmd_dyck(args) -> int:
    path = dyck.parse_path(args.path)
    valid = dyck.is_rational_dyck(path)
    payload = {
        "steps": str(path),
        "target": list(path.target),
        "valid": valid,
        "area": None,
        "mesa_set": None,
    }
    plain_lines = [f"path: {path} to {path.target}", f"valid: {str(valid).lower()}"]
    if valid:
        rp = dyck.RationalDyckPath.from_path(path)
        payload["area"] = dyck.area(rp)
        plain_lines.append(f"area: {payload['area']}")
        ell, m = path.target
        if m == 2 * ell - 1:
            M = dyck.delta_inverse(rp)
            payload["mesa_set"] = list(M.elements)
            plain_lines.append(f"mesa set: {M} (order {M.context_order})")
    _emit(args, payload, "\n".join(plain_lines))
    return EXIT_OK


def _cmd_table(args) -> int:
    engines = ("subset", "recurrence", "closed_form")
    reports = [counting.full_report(n, engines) for n in range(1, args.n_max + 1)]
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    elif args.format == "csv":
        print(counting.CSV_HEADER)
        for r in reports:
            print(r.to_csv_row())
    else:
        for r in reports:
            print(_report_plain(r))
    if not all(r.agree for r in reports):
        print("engine disagreement detected", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def _cmd_render(args) -> int:
    styling = render.Styling(cell=args.cell)
    if args.kind == "perm":
        w = stirling.validate_stirling(stirling.parse_word(args.input))
        svg = render.render_permutation(w, styling)
    else:
        path = dyck.parse_path(args.input)
        svg = render.render_dyck(dyck.RationalDyckPath.from_path(path), styling)
    with open(args.output, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(f"wrote {args.output}")
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "mesa": _cmd_mesa,
    "count": _cmd_count,
    "list": _cmd_list,
    "maximal": _cmd_maximal,
    "dyck": _cmd_dyck,
    "table": _cmd_table,
    "render": _cmd_render,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (StirlingMesasError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
