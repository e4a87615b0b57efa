"""Command-line front end.

Subcommands:
    dims    dimension table (a_n, b_n, w_n, c_n, running sum) for an expression
    series  coefficients of the filtered-algebra Hilbert series, or its closed form
    basis   restricted Hall basis of one graded piece for the free group
    verify  run the cross-route verification suites

Expression grammar: free(d), cyclic(p), demushkin(d), superpyth(d), zp(d),
infix '*' for free products (left associative), infix 'x' for direct
products. 'x' binds tighter than '*', so "a * b x c" means "a * (b x c)";
parenthesize to override. Whitespace is ignored.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 validation error, 4 integrality failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import verify as verify_mod
from .dimensions import NegativeDimension, NonIntegralW, dims_table
from .groupspec import (
    ParseError,
    ValidationError,
    closed_form,
    hp_series,
    parse_group_spec,
    to_text,
)
from .hall import basis_json_dict, basis_text_lines, zassenhaus_basis
from .series import format_poly

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_INTEGRALITY = 4

_GRAMMAR_HELP = (
    "group expression: free(d) | cyclic(p) | demushkin(d) | superpyth(d) | "
    "zp(d) | e * e (free product) | e x e (direct product, binds tighter) | (e)"
)


def _table_lines(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return lines


def _csv_lines(headers: tuple[str, ...], rows: list[tuple[str, ...]]) -> list[str]:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().splitlines()


def cmd_dims(args: argparse.Namespace) -> list[str]:
    spec = parse_group_spec(args.spec)
    table = dims_table(spec, args.prime, args.max_n)
    n_max = args.max_n
    if args.format == "json":
        payload = {
            "spec": to_text(spec),
            "p": args.prime,
            "N": n_max,
            "a": list(table.a),
            "b": [str(x) for x in table.b],
            "w": list(table.w),
            "c": list(table.c),
            "galois_exponents": [table.galois_exponent(n) for n in range(1, n_max + 2)],
        }
        return [json.dumps(payload, indent=2)]
    headers = ("n", "a_n", "b_n", "w_n", "c_n", "sum_c")
    rows = []
    running = 0
    for n in range(1, n_max + 1):
        running += table.c[n]
        rows.append(
            (str(n), str(table.a[n]), str(table.b[n]),
             str(table.w[n]), str(table.c[n]), str(running))
        )
    if args.format == "csv":
        return _csv_lines(headers, rows)
    return _table_lines(headers, rows)


def cmd_series(args: argparse.Namespace) -> list[str]:
    spec = parse_group_spec(args.spec)
    if args.closed_form:
        recipe = closed_form(spec, args.prime)
        if recipe.is_rational:
            num = format_poly(recipe.rational.num)
            den = format_poly(recipe.rational.den)
            text = f"({num}) / ({den})"
            if args.format == "json":
                payload = {
                    "spec": to_text(spec),
                    "p": args.prime,
                    "closed_form": {"kind": "rational", "num": num, "den": den},
                }
                return [json.dumps(payload, indent=2)]
            return [text]
        if args.format == "json":
            payload = {
                "spec": to_text(spec),
                "p": args.prime,
                "closed_form": {"kind": "product", "text": recipe.product_form},
            }
            return [json.dumps(payload, indent=2)]
        return [recipe.product_form]
    series = hp_series(spec, args.prime, args.max_n)
    coeffs = series.int_coeffs()
    if args.format == "json":
        payload = {
            "spec": to_text(spec),
            "p": args.prime,
            "N": args.max_n,
            "a": coeffs,
        }
        return [json.dumps(payload, indent=2)]
    if args.format == "csv":
        rows = [(str(n), str(a)) for n, a in enumerate(coeffs)]
        return _csv_lines(("n", "a_n"), rows)
    return ["[" + ", ".join(str(a) for a in coeffs) + "]"]


def cmd_basis(args: argparse.Namespace) -> list[str]:
    basis = zassenhaus_basis(args.rank, args.prime, args.degree)
    if args.format == "json":
        payload = basis_json_dict(args.rank, args.prime, args.degree, basis)
        return [json.dumps(payload, indent=2)]
    lines = basis_text_lines(basis, args.prime)
    if args.format == "csv":
        rows = [
            (str(i), line, str(el.p_exponent))
            for i, (line, el) in enumerate(zip(lines, basis), start=1)
        ]
        return _csv_lines(("index", "element", "p_exponent"), rows)
    return lines + [f"count = {len(basis)}"]


def cmd_verify(args: argparse.Namespace) -> tuple[list[str], int]:
    if args.suite == "roundtrip":
        results = verify_mod.roundtrip_checks(args.prime, args.max_n)
    elif args.suite == "closedforms":
        results = verify_mod.closedform_checks(args.prime, args.max_n)
    elif args.suite == "finite":
        results = verify_mod.finite_checks(args.include_slow)
    else:
        results = verify_mod.all_checks(args.prime, args.max_n, args.include_slow)
    lines = []
    failures = 0
    for res in results:
        if res.passed:
            lines.append(f"PASS {res.name}")
        else:
            failures += 1
            lines.append(f"FAIL {res.name}: {res.detail}")
    lines.append(f"{len(results) - failures}/{len(results)} checks passed")
    return lines, (EXIT_VERIFY if failures else EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zass",
        description="Exact Zassenhaus filtration dimensions for pro-p group expressions.",
        epilog=_GRAMMAR_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, max_n: bool = True) -> None:
        p.add_argument("--prime", type=int, default=2, metavar="P",
                       help="working prime (default 2)")
        if max_n:
            p.add_argument("--max-n", type=int, default=16, metavar="N",
                           help="truncation degree (default 16)")
        p.add_argument("--format", choices=("table", "csv", "json"),
                       default="table", help="output format (default table)")

    p_dims = sub.add_parser("dims", help="dimension table for a group expression")
    p_dims.add_argument("spec", help=_GRAMMAR_HELP)
    common(p_dims)

    p_series = sub.add_parser("series", help="Hilbert series coefficients")
    p_series.add_argument("spec", help=_GRAMMAR_HELP)
    p_series.add_argument("--closed-form", action="store_true",
                          help="print the closed form instead of coefficients")
    common(p_series)

    p_basis = sub.add_parser("basis", help="Hall basis of one graded piece (free group)")
    p_basis.add_argument("rank", type=int, help="number of free generators")
    p_basis.add_argument("--degree", type=int, default=4, metavar="N",
                         help="graded piece to list (default 4)")
    common(p_basis, max_n=False)

    p_verify = sub.add_parser("verify", help="run cross-route verification suites")
    p_verify.add_argument("--suite", choices=("roundtrip", "closedforms", "finite", "all"),
                          default="all")
    p_verify.add_argument("--include-slow", action="store_true",
                          help="include the order-32768 finite-group check (takes minutes)")
    common(p_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    # compute everything before printing so errors never leave partial output
    try:
        if args.command == "dims":
            lines, code = cmd_dims(args), EXIT_OK
        elif args.command == "series":
            lines, code = cmd_series(args), EXIT_OK
        elif args.command == "basis":
            lines, code = cmd_basis(args), EXIT_OK
        else:
            lines, code = cmd_verify(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NonIntegralW, NegativeDimension) as exc:
        print(f"integrality error: {exc}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    for line in lines:
        print(line)
    return code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
