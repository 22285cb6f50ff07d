"""Command line front end emitting exact combinatorial tables.

Four subcommands cover the pipeline:

  fillings    permissible fillings with reading words, dimension pairs, x
  rolldowns   fixed points with rolldown words and degrees (single row)
  verify      pinball success conditions, or the 334 module-basis checks
  matrix      projected restriction matrix over all fixed points (single row)

Every subcommand takes --n, --h (comma list, defaulting to the 334 family
for n >= 4 and its nearest valid relative below), --lambda (row lengths,
defaulting to the single row), --format {table,json,csv} and --jobs.

The json format is the machine format: one record per line, keys sorted,
integers that can grow without bound carried as strings.  Projected values
serialize as {"coeff": "<int>", "deg": <int>} with {"coeff": "0", "deg": 0}
as the zero sentinel; full multivariate values (matrix --full-torus) as
lists of {"exps": [..], "coeff": "<int>"}.  Identical flags produce
byte-identical output.

Exit status: 0 on success, 1 when a verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from .billey import S1Value, restriction_matrix, sigma_restriction
from .fillings import (
    diagram_size,
    dimension_pairs,
    enumerate_permissible,
    hessenberg_334,
    reading_word,
    single_row,
    top_parts,
    validate_diagram,
    validate_hessenberg,
)
from .hess334 import verify_334_theorem
from .pinball import rolldown_table, rolldown_word, verify_pinball

__all__ = ["main", "build_parser", "parse_records", "default_hessenberg"]


def default_hessenberg(n: int) -> tuple[int, ...]:
    """The 334 family for n >= 4; below that, its nearest valid relative."""
    if n >= 4:
        return hessenberg_334(n)
    return {1: (1,), 2: (2, 2), 3: (3, 3, 3)}[n]


def _comma_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated integer list, got {text!r}"
        )


# ---------------------------------------------------------------------------
# Formatting


def _fmt_entries(values: Sequence[int], n: int) -> str:
    sep = "" if n <= 9 else ","
    return sep.join(str(v) for v in values)


def _fmt_word(word: Sequence[int]) -> str:
    return " ".join(f"s_{i}" for i in word) if word else "e"


def _fmt_pairs(pairs) -> str:
    return " ".join(f"({a},{b})" for a, b in pairs) if pairs else "-"


def _fmt_s1(value: S1Value) -> str:
    coeff, deg = value
    if coeff == 0:
        return "0"
    if deg == 0:
        return str(coeff)
    lead = {1: "", -1: "-"}.get(coeff, str(coeff))
    return f"{lead}t" if deg == 1 else f"{lead}t^{deg}"


def _s1_json(value: S1Value) -> dict:
    return {"coeff": str(value.coeff), "deg": value.degree}


def _poly_json(p) -> list[dict]:
    return [{"exps": list(e), "coeff": str(c)} for e, c in p.sorted_terms()]


def _jsonable(obj):
    if isinstance(obj, S1Value):
        return _s1_json(obj)
    if isinstance(obj, frozenset):
        return sorted(obj)
    if isinstance(obj, (tuple, list)):
        return [_jsonable(x) for x in obj]
    return obj


# ---------------------------------------------------------------------------
# Emission


def _emit_json(records, out) -> None:
    for r in records:
        out.write(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n")


def parse_records(text: str) -> list[dict]:
    """Parse machine (json) output back into its records."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _emit_table(headers, rows, out) -> None:
    widths = [len(cell) for cell in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))

    def line(cells) -> str:
        return "  ".join(
            cell.ljust(widths[i]) for i, cell in enumerate(cells)
        ).rstrip()

    out.write(line(headers) + "\n")
    out.write("  ".join("-" * width for width in widths) + "\n")
    for row in rows:
        out.write(line(row) + "\n")


def _emit_csv(headers, rows, out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)


def _emit(args, records, headers, rows) -> None:
    if args.format == "json":
        _emit_json(records, sys.stdout)
    elif args.format == "csv":
        _emit_csv(headers, rows, sys.stdout)
    else:
        _emit_table(headers, rows, sys.stdout)


# ---------------------------------------------------------------------------
# Argument resolution


def _resolve(args) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    n = args.n
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if args.jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {args.jobs}")
    h = tuple(args.h) if args.h is not None else default_hessenberg(n)
    if len(h) != n:
        raise ValueError(f"h has {len(h)} values but n = {n}")
    validate_hessenberg(h)
    shape = tuple(args.shape) if args.shape is not None else single_row(n)
    validate_diagram(shape)
    if diagram_size(shape) != n:
        raise ValueError(
            f"shape {shape} has {diagram_size(shape)} cells but n = {n}"
        )
    return n, h, shape


def _require_single_row(shape, command: str) -> None:
    if len(shape) != 1:
        raise ValueError(f"{command} needs the single-row shape, got {shape}")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_fillings(args) -> int:
    n, h, shape = _resolve(args)
    records, rows = [], []
    for f in enumerate_permissible(shape, h):
        pairs = dimension_pairs(f, h)
        ordered = sorted(pairs)
        x = top_parts(pairs, n)
        records.append(
            {
                "filling": [list(row) for row in f],
                "word": list(reading_word(f)),
                "pairs": [list(p) for p in ordered],
                "x": list(x),
            }
        )
        rows.append(
            (
                " | ".join(_fmt_entries(row, n) for row in f),
                _fmt_entries(reading_word(f), n),
                _fmt_pairs(ordered),
                ",".join(str(v) for v in x) if x else "-",
            )
        )
    _emit(args, records, ("filling", "reading-word", "dimension-pairs", "x"), rows)
    return 0


def cmd_rolldowns(args) -> int:
    n, h, shape = _resolve(args)
    _require_single_row(shape, "rolldowns")
    records, rows = [], []
    for w, roll in rolldown_table(shape, h).items():
        word = rolldown_word(w, shape, h)
        records.append(
            {
                "w": list(w),
                "rolldown": list(roll),
                "word": list(word),
                "length": len(word),
            }
        )
        rows.append(
            (
                _fmt_entries(w, n),
                _fmt_entries(roll, n),
                _fmt_word(word),
                str(len(word)),
            )
        )
    _emit(args, records, ("w", "rolldown", "word", "length"), rows)
    return 0


def cmd_verify(args) -> int:
    n, h, shape = _resolve(args)
    if args.mode == "basis334":
        _require_single_row(shape, "verify --mode basis334")
        if n >= 4 and h != hessenberg_334(n):
            raise ValueError(f"basis334 needs h = {hessenberg_334(n)}, got {h}")
        report = verify_334_theorem(n, jobs=args.jobs)
    else:
        report = verify_pinball(shape, h)
    checks = report.checks()
    records = [
        {
            "check": c.name,
            "passed": c.passed,
            "witnesses": _jsonable(c.witnesses),
        }
        for c in checks
    ]
    records.append({"check": "result", "passed": report.passed, "witnesses": []})
    rows = [
        (c.name, "pass" if c.passed else "FAIL", str(len(c.witnesses)))
        for c in checks
    ]
    rows.append(("result", "pass" if report.passed else "FAIL", "0"))
    _emit(args, records, ("check", "status", "witnesses"), rows)
    return 0 if report.passed else 1


def cmd_matrix(args) -> int:
    n, h, shape = _resolve(args)
    _require_single_row(shape, "matrix")
    table = rolldown_table(shape, h)
    points = tuple(sorted(table))
    records, rows = [], []
    if args.full_torus:
        for v in points:
            sigmas = [sigma_restriction(table[v], w) for w in points]
            records.append(
                {"v": list(v), "entries": [_poly_json(p) for p in sigmas]}
            )
            rows.append((_fmt_entries(v, n), *[repr(p) for p in sigmas]))
    else:
        matrix = restriction_matrix(points, table, jobs=args.jobs)
        for i, v in enumerate(points):
            records.append(
                {"v": list(v), "entries": [_s1_json(s) for s in matrix.values[i]]}
            )
            rows.append(
                (_fmt_entries(v, n), *[_fmt_s1(s) for s in matrix.values[i]])
            )
    headers = ("v", *(_fmt_entries(w, n) for w in points))
    _emit(args, records, headers, rows)
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hesspin",
        description=(
            "Exact tables for Hessenberg fixed points, rolldowns and"
            " equivariant restrictions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_common(sp) -> None:
        sp.add_argument(
            "--n", type=int, required=True, help="size of the symmetric group S_n"
        )
        sp.add_argument(
            "--h",
            type=_comma_ints,
            default=None,
            metavar="H1,H2,...",
            help=(
                "Hessenberg function values"
                " (default: 334 family, clamped for n < 4)"
            ),
        )
        sp.add_argument(
            "--lambda",
            dest="shape",
            type=_comma_ints,
            default=None,
            metavar="L1,L2,...",
            help="Young diagram row lengths (default: single row)",
        )
        sp.add_argument(
            "--format",
            choices=("table", "json", "csv"),
            default="table",
            help="output format (json is the machine format, one record per line)",
        )
        sp.add_argument(
            "--jobs", type=int, default=1, help="worker threads for matrix rows"
        )

    p_fillings = sub.add_parser(
        "fillings", help="permissible fillings with dimension pairs"
    )
    add_common(p_fillings)
    p_fillings.set_defaults(func=cmd_fillings)

    p_rolldowns = sub.add_parser(
        "rolldowns", help="fixed points with rolldown words and degrees"
    )
    add_common(p_rolldowns)
    p_rolldowns.set_defaults(func=cmd_rolldowns)

    p_verify = sub.add_parser(
        "verify", help="pinball success or the 334 module-basis checks"
    )
    add_common(p_verify)
    p_verify.add_argument(
        "--mode",
        choices=("pinball", "basis334"),
        default="pinball",
        help="which verification to run",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_matrix = sub.add_parser(
        "matrix", help="projected restriction matrix over all fixed points"
    )
    add_common(p_matrix)
    p_matrix.add_argument(
        "--full-torus",
        action="store_true",
        dest="full_torus",
        help="emit multivariate restrictions instead of the circle projection",
    )
    p_matrix.set_defaults(func=cmd_matrix)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
