"""Command-line frontend: enumerate, table, stats, verify, normality.

Output is deterministic byte for byte: LF line endings, no BOM, stable key
order, floats rendered with 17 significant digits, and results independent
of the thread count.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Iterator

from . import counts as ct
from . import stats as st
from .genus import genus_by_reduction
from .oracle import FAULTS, verify_all
from .words import (
    DEFAULT_ENUM_CAP,
    EnumerationCapExceeded,
    WordError,
    canonical_class_reps,
    enumerate_T,
    enumerate_Tp,
    to_record,
)

__all__ = ["build_parser", "run", "main"]

THREADS_ENV_VAR = "TWOBRIDGE_THREADS"

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE_CAP = 3


def _render_json(value, indent: int | None = None, level: int = 0) -> str:
    """Deterministic JSON: insertion-order keys, floats at 17 significant digits."""
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        items = [(json.dumps(str(k)), _render_json(v, indent, level + 1)) for k, v in value.items()]
        if indent is None:
            return "{" + ",".join(f"{k}:{v}" for k, v in items) + "}"
        if not items:
            return "{}"
        pad = " " * indent * (level + 1)
        close = " " * indent * level
        body = ",\n".join(f"{pad}{k}: {v}" for k, v in items)
        return "{\n" + body + "\n" + close + "}"
    if isinstance(value, (list, tuple)):
        parts = [_render_json(v, indent, level + 1) for v in value]
        if indent is None:
            return "[" + ",".join(parts) + "]"
        if not parts:
            return "[]"
        pad = " " * indent * (level + 1)
        close = " " * indent * level
        return "[\n" + ",\n".join(pad + p for p in parts) + "\n" + close + "]"
    raise TypeError(f"cannot render {type(value).__name__}")


def _emit_lines(lines: Iterable[str], output: str | None) -> None:
    if output is None:
        for line in lines:
            sys.stdout.write(line + "\n")
        return
    with open(output, "w", encoding="utf-8", newline="") as fh:
        for line in lines:
            fh.write(line + "\n")


def _json_array_lines(rows: Iterator[dict]) -> Iterator[str]:
    yield "["
    pending: str | None = None
    for row in rows:
        if pending is not None:
            yield "  " + pending + ","
        pending = _render_json(row)
    if pending is not None:
        yield "  " + pending
    yield "]"


def _csv_value(value) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _csv_lines(header: list[str], rows: Iterator[dict]) -> Iterator[str]:
    yield ",".join(header)
    for row in rows:
        yield ",".join(_csv_value(row[field]) for field in header)


def _tabular_lines(fmt: str, header: list[str], rows: Iterator[dict]) -> Iterator[str]:
    if fmt == "csv":
        return _csv_lines(header, rows)
    if fmt == "jsonl":
        return (_render_json(row) for row in rows)
    return _json_array_lines(rows)


def _resolve_threads(flag: int | None) -> int:
    if flag is None:
        raw = os.environ.get(THREADS_ENV_VAR, "")
        if raw.strip():
            try:
                flag = int(raw)
            except ValueError:
                raise ValueError(
                    f"{THREADS_ENV_VAR} must be an integer, got {raw!r}"
                ) from None
        else:
            flag = 1
    if flag < 1:
        raise ValueError(f"thread count must be >= 1, got {flag}")
    return flag


def _resolve_cap(max_enum_c: int | None) -> int:
    if max_enum_c is None:
        return DEFAULT_ENUM_CAP
    if max_enum_c < 3:
        raise ValueError(f"--max-enum-c must be >= 3, got {max_enum_c}")
    return 2 ** (max_enum_c - 2)


def cmd_enumerate(args: argparse.Namespace) -> int:
    _resolve_threads(args.threads)  # validated for interface parity; output is identical
    cap = _resolve_cap(args.max_enum_c)
    c = args.crossings

    # Build the stream up front: argument and cap errors fire here, before
    # any output file is opened, so failed runs leave nothing behind.
    if args.dedupe:
        classes = canonical_class_reps(c, cap=cap)
    elif args.palindromic_only:
        words = enumerate_Tp(c, cap=cap)
    else:
        words = enumerate_T(c, cap=cap)

    def rows() -> Iterator[dict]:
        if args.dedupe:
            stream = classes
            if args.palindromic_only:
                stream = ((w, m) for w, m in stream if m == 1)
            for w, mult in stream:
                yield to_record(w, genus=genus_by_reduction(w), multiplicity=mult)
        else:
            for w in words:
                yield to_record(w, genus=genus_by_reduction(w))

    header = ["c", "eps", "symbols", "palindromic", "genus"]
    if args.dedupe:
        header.append("multiplicity")

    def csv_rows() -> Iterator[dict]:
        for record in rows():
            record["eps"] = "".join(map(str, record["eps"]))
            yield record

    if args.format == "csv":
        lines = _csv_lines(header, csv_rows())
    elif args.format == "jsonl":
        lines = (_render_json(record) for record in rows())
    else:
        lines = _json_array_lines(rows())
    _emit_lines(lines, args.output)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if args.min_c < 3:
        raise ValueError(f"--min-c must be >= 3, got {args.min_c}")

    def rows() -> Iterator[dict]:
        for c in range(args.min_c, args.max_c + 1):
            for g in range(1, ct.genus_upper_bound(c) + 1):
                yield {
                    "c": c,
                    "g": g,
                    "t": ct.t_of(c, g),
                    "tp": ct.tp_of(c, g),
                    "tbar": ct.tbar_of(c, g),
                }

    _emit_lines(_tabular_lines(args.format, ["c", "g", "t", "tp", "tbar"], rows()), args.output)
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    doc = st.stats_document(args.crossings)
    indent = 2 if args.format == "json" else None
    _emit_lines([_render_json(doc, indent=indent)], args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    threads = _resolve_threads(args.threads)
    enum_max = args.max_enum_c if args.max_enum_c is not None else (22 if args.slow else 16)
    seifert_max = 20 if args.slow else 14
    report = verify_all(
        enum_max,
        args.max_c,
        seifert_max=seifert_max,
        threads=threads,
        inject_fault=args.inject_fault,
    )
    _emit_lines([_render_json(report.to_json(), indent=2)], args.output)
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cmd_normality(args: argparse.Namespace) -> int:
    try:
        values = [int(part) for part in args.crossings_list.split(",") if part.strip()]
    except ValueError as exc:
        raise ValueError(f"bad --crossings-list: {exc}") from None
    if not values:
        raise ValueError("--crossings-list is empty")
    for c in values:
        if c < 5:
            raise ValueError(f"normality diagnostics need c >= 5, got {c}")

    def rows() -> Iterator[dict]:
        for c in values:
            n = (c - 3) // 2
            yield {
                "c": c,
                "n": n,
                "ks_to_normal": st.ks_to_normal(c),
                "binom_tv": st.binom_tv_distance(n),
                "mean_gap": st.mean_gap(c),
                "var_gap": st.var_gap(c),
            }

    header = ["c", "n", "ks_to_normal", "binom_tv", "mean_gap", "var_gap"]
    _emit_lines(_tabular_lines(args.format, header, rows()), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Exact enumeration and genus statistics of 2-bridge knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_p = sub.add_parser("enumerate", help="stream word records at one crossing number")
    enumerate_p.add_argument("--crossings", type=int, required=True)
    enumerate_p.add_argument("--palindromic-only", action="store_true")
    enumerate_p.add_argument("--dedupe", action="store_true", help="one record per knot class")
    enumerate_p.add_argument("--format", choices=["jsonl", "csv", "json"], default="jsonl")
    enumerate_p.add_argument("--output", default=None)
    enumerate_p.add_argument("--threads", type=int, default=None)
    enumerate_p.add_argument(
        "--max-enum-c", type=int, default=None, help="raise/lower the enumeration cap to this c"
    )
    enumerate_p.set_defaults(func=cmd_enumerate)

    table_p = sub.add_parser("table", help="emit the t/tp/tbar count table")
    table_p.add_argument("--min-c", type=int, default=3)
    table_p.add_argument("--max-c", type=int, default=20)
    table_p.add_argument("--format", choices=["csv", "json", "jsonl"], default="csv")
    table_p.add_argument("--output", default=None)
    table_p.set_defaults(func=cmd_table)

    stats_p = sub.add_parser("stats", help="statistics document for the knot-class ensemble")
    stats_p.add_argument("--crossings", type=int, required=True)
    stats_p.add_argument("--format", choices=["json", "jsonl"], default="json")
    stats_p.add_argument("--output", default=None)
    stats_p.set_defaults(func=cmd_stats)

    verify_p = sub.add_parser("verify", help="run the cross-verification suite")
    verify_p.add_argument("--max-enum-c", type=int, default=None)
    verify_p.add_argument("--max-c", type=int, default=60, help="formula-check upper bound")
    verify_p.add_argument("--slow", action="store_true", help="extend enumeration ranges")
    verify_p.add_argument("--inject-fault", choices=sorted(FAULTS), default=None)
    verify_p.add_argument("--threads", type=int, default=None)
    verify_p.add_argument("--format", choices=["json"], default="json")
    verify_p.add_argument("--output", default=None)
    verify_p.set_defaults(func=cmd_verify)

    normality_p = sub.add_parser("normality", help="normal-approximation diagnostics")
    normality_p.add_argument("--crossings-list", required=True, help="comma-separated c values")
    normality_p.add_argument("--format", choices=["csv", "json", "jsonl"], default="csv")
    normality_p.add_argument("--output", default=None)
    normality_p.set_defaults(func=cmd_normality)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return EXIT_OK if code in (0, None) else int(code)
    try:
        return args.func(args)
    except EnumerationCapExceeded as exc:
        print(f"twobridge: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except (WordError, ValueError) as exc:
        print(f"twobridge: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"twobridge: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
