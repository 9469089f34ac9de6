"""Command-line front end.

Subcommands cover single counts (cell), rows and triangular tables, exact
column polynomials, the verification suites, OEIS b-file cross-checks, the
mod-p triangle image, and a sweep-vs-enumeration oracle check.

Exit codes: 0 success or verified, 1 verification failure, 2 usage or file
error.  All numeric output is exact decimal text, and identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sequences, three_rows, transfer, two_rows
from .core import OracleSizeError
from .polynomial import format_polynomial

_MAX_FAILURES_SHOWN = 25

# suite name -> (callable taking one bound, default bound, meaning of --max)
_SUITES = {
    "pascal": (two_rows.verify_pascal_identity, 100, "n"),
    "hockeystick": (two_rows.verify_hockeystick, 100, "n"),
    "unimodal": (two_rows.verify_unimodality, 100, "n"),
    "delta": (two_rows.verify_delta_properties, 50, "k"),
    "section4": (two_rows.verify_row_max_identities, 50, "k"),
    "c1": (two_rows.check_max_diff_conjecture, 50, "k"),
    "schroeder": (two_rows.check_schroeder_differences, 30, "k"),
    "boundary": (three_rows.verify_boundary, 100, "n"),
    "coeffs3": (three_rows.coefficient_check, 15, "k"),
    "firstdiff": (three_rows.first_difference_check, 10, "k"),
    "remark3": (three_rows.check_left_edge_agreement, 12, "k"),
    "oracle": (transfer.verify_oracle, 24, "cells"),
}


def _print_report(report, fmt):
    if fmt == "json-lines":
        for params, expected, actual in report.failures:
            record = {
                "suite": report.name,
                "params": str(params),
                "expected": str(expected),
                "actual": str(actual),
            }
            print(json.dumps(record))
    else:
        print(f"suite: {report.name}")
        print(f"range: {report.range}")
        if report.experimental:
            print("note: EXPERIMENTAL (numeric check of an unproven statement;"
                  " a failure is a finding, not a bug)")
        if report.passed:
            print("result: PASS")
        else:
            print(f"result: FAIL ({len(report.failures)} failures)")
            for params, expected, actual in report.failures[:_MAX_FAILURES_SHOWN]:
                print(f"  {params}: expected {expected}, got {actual}")
            hidden = len(report.failures) - _MAX_FAILURES_SHOWN
            if hidden > 0:
                print(f"  ... ({hidden} more)")
    return 0 if report.passed else 1


def _cmd_cell(args):
    if args.m < 1 or args.n < 0 or args.k < 0:
        raise ValueError("need m >= 1, n >= 0, k >= 0")
    value = transfer.dp_cell(args.m, args.n, args.k)
    if args.format == "csv":
        print("m,n,k,count")
        print(f"{args.m},{args.n},{args.k},{value}")
    elif args.format == "json-lines":
        print(json.dumps({"m": args.m, "n": args.n, "k": args.k, "count": value}))
    else:
        print(value)
    return 0


def _print_rows(rows, fmt):
    if fmt == "csv":
        print("n,k,count")
        for row in rows:
            for k, v in enumerate(row.counts):
                print(f"{row.n},{k},{v}")
    elif fmt == "json-lines":
        for row in rows:
            print(json.dumps({"m": row.m, "n": row.n, "counts": list(row.counts)}))
    else:
        width = max(
            max((len(str(v)) for row in rows for v in row.counts), default=1),
            len(str(max(len(r) for r in rows) - 1)),
        )
        label = max(3, len(str(rows[-1].n)))
        k_max = max(len(r) for r in rows) - 1
        header = "n\\k".rjust(label) + " " + " ".join(
            str(k).rjust(width) for k in range(k_max + 1)
        )
        print(header)
        for row in rows:
            cells = " ".join(str(v).rjust(width) for v in row.counts)
            print(f"{str(row.n).rjust(label)} {cells}")
    return 0


def _cmd_row(args):
    if args.m < 1 or args.n < 0:
        raise ValueError("need m >= 1, n >= 0")
    row = transfer.dp_row(args.m, args.n)
    if args.format == "plain":
        print(" ".join(str(v) for v in row.counts))
        return 0
    return _print_rows([row], args.format)


def _cmd_table(args):
    if args.m < 1 or args.rows < 1:
        raise ValueError("need m >= 1, rows >= 1")
    return _print_rows(transfer.dp_table(args.m, args.rows - 1), args.format)


def _cmd_poly(args):
    if args.k < 1:
        raise ValueError("need k >= 1")
    poly = two_rows.poly2(args.k) if args.m == 2 else three_rows.poly3(args.k)
    print(format_polynomial(poly))
    return 0


def _cmd_verify(args):
    func, default, _ = _SUITES[args.suite]
    bound = args.max if args.max is not None else default
    return _print_report(func(bound), args.format)


def _cmd_oeis_check(args):
    reference = sequences.load_bfile(args.bfile)
    bound = args.max
    if args.target == "triangle2":
        computed = sequences.flatten_triangle(2, bound if bound is not None else 19)
        offset = reference.first_index
    elif args.target == "triangle3":
        computed = sequences.flatten_triangle(3, bound if bound is not None else 12)
        offset = reference.first_index
    elif args.target == "rowmax2":
        computed = two_rows.row_max_sequence(bound if bound is not None else 30)
        offset = reference.first_index
    else:  # schroeder: differences start at k = 1, skip the reference's S(0)
        computed = two_rows.schroeder_difference_sequence(
            bound if bound is not None else 30
        )
        offset = reference.first_index + 1
    return _print_report(
        sequences.compare_sequence(computed, reference, offset), args.format
    )


def _cmd_image(args):
    if args.rows < 1:
        raise ValueError("need rows >= 1")
    if args.mod < 2:
        raise ValueError("need mod >= 2")
    sequences.emit_mod_image(args.rows, args.mod, args.out)
    print(f"wrote {args.out}: {args.rows}x{args.rows} pgm, mod {args.mod}")
    return 0


def _cmd_oracle_check(args):
    if args.max_cells < 1:
        raise ValueError("need max-cells >= 1")
    return _print_report(transfer.verify_oracle(args.max_cells), args.format)


def _add_format(sub, choices=("plain", "csv", "json-lines")):
    sub.add_argument("--format", choices=choices, default="plain",
                     help="output format (default: plain)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridfree",
        description="Exact counts of adjacency-free square selections on "
                    "m x n grids, with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cell", help="one count T(m,n;k)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_cell)

    p = sub.add_parser("row", help="all counts for one grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_row)

    p = sub.add_parser("table", help="triangular table of rows n = 0..rows-1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("poly", help="exact column polynomial for fixed k")
    p.add_argument("--m", type=int, choices=(2, 3), required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(_SUITES), required=True)
    p.add_argument("--max", type=int, default=None,
                   help="sweep bound (suite-specific default)")
    _add_format(p, choices=("plain", "json-lines"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oeis-check", help="compare against a local OEIS b-file")
    p.add_argument("--bfile", required=True, help="path to a local b-file")
    p.add_argument("--target",
                   choices=("triangle2", "triangle3", "rowmax2", "schroeder"),
                   required=True)
    p.add_argument("--max", type=int, default=None,
                   help="sweep bound (target-specific default)")
    _add_format(p, choices=("plain", "json-lines"))
    p.set_defaults(func=_cmd_oeis_check)

    p = sub.add_parser("image", help="mod-p triangle image as binary PGM")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--out", required=True, help="output path")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("oracle-check",
                       help="sweep vs. brute-force enumeration on small grids")
    p.add_argument("--max-cells", type=int, default=24,
                   help="largest m*n to enumerate (default: 24)")
    _add_format(p, choices=("plain", "json-lines"))
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OracleSizeError, sequences.BFileFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
