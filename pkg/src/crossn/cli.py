"""Command-line front end: tables, products, axiom verification, counterexample.

Exit codes: 0 on success with all expected verdicts, 1 when a verification
verdict contradicts the expectation, 2 on usage errors.  Exact mode output
contains only integer/rational literals; identical invocations with the same
seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Tuple

from . import symbolic, verify
from .vecalg import DOUBLE, EXACT, Vector, cross3, cross7, det_product, dot, \
    format_vector, padded_cross, parse_vector, table_product

PRODUCTS = ("table", "cross3", "cross7", "padded", "det")
FORMATS = ("md", "csv", "json")
AXIOM_CHOICES = ("perpendicular", "pythagorean", "bilinear", "identities", "all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossn",
        description="Exact cross-product tables and axiom verification on R^n.",
    )
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--exact",
        dest="mode",
        action="store_const",
        const=EXACT,
        help="exact rational arithmetic (default)",
    )
    mode.add_argument(
        "--float",
        dest="mode",
        action="store_const",
        const=DOUBLE,
        help="double-precision evaluation (product evaluation only)",
    )
    parser.set_defaults(mode=EXACT)
    parser.add_argument("--output", metavar="PATH", help="write output to a file")

    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print a basis multiplication table")
    p_table.add_argument("--k", type=int, required=True, help="basis level (1..10)")
    p_table.add_argument("--format", choices=FORMATS, default="md")

    p_cross = sub.add_parser("cross", help="multiply two vectors")
    p_cross.add_argument("--n", type=int, required=True, help="dimension")
    p_cross.add_argument("--u", required=True, help="first vector, e.g. 1,-2/3,0")
    p_cross.add_argument("--v", required=True, help="second vector")
    p_cross.add_argument("--product", choices=PRODUCTS, required=True)

    p_verify = sub.add_parser("verify", help="check axioms against a product")
    p_verify.add_argument("--product", choices=PRODUCTS[:4], required=True)
    p_verify.add_argument("--n", type=int, help="dimension (padded/cross3/cross7)")
    p_verify.add_argument("--k", type=int, help="table level (table product)")
    p_verify.add_argument("--samples", type=int, default=verify.DEFAULT_SAMPLES)
    p_verify.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p_verify.add_argument(
        "--axioms",
        default="all",
        help="comma-separated subset of perpendicular,pythagorean,bilinear,"
        "identities (default: all)",
    )

    p_ce = sub.add_parser(
        "counterexample", help="show the Pythagorean failure for level k >= 3"
    )
    p_ce.add_argument("--k", type=int, required=True, help="basis level (>= 3)")

    p_cls = sub.add_parser(
        "classify", help="which dimensions admit a cross product"
    )
    p_cls.add_argument("--max-k", type=int, default=3, help="largest level (1..6)")

    return parser


def _fail_usage(parser: argparse.ArgumentParser, message: str) -> None:
    parser.error(message)  # exits with status 2


def _table_level_for_dim(n: int) -> Optional[int]:
    k = (n + 1).bit_length() - 2
    return k if k >= 1 and (1 << (k + 1)) - 1 == n else None


def cmd_table(args, parser) -> Tuple[str, int]:
    if not 1 <= args.k <= symbolic.MAX_LEVEL:
        _fail_usage(parser, f"--k must be in 1..{symbolic.MAX_LEVEL}")
    table = symbolic.build_table(args.k)
    if args.format == "md":
        return symbolic.table_to_markdown(table), 0
    if args.format == "csv":
        return symbolic.table_to_csv(table), 0
    return symbolic.table_to_json(table), 0


def cmd_cross(args, parser) -> Tuple[str, int]:
    try:
        u = parse_vector(args.u, args.mode)
        v = parse_vector(args.v, args.mode)
    except ValueError as exc:
        _fail_usage(parser, str(exc))
    if u.dim != args.n or v.dim != args.n:
        _fail_usage(parser, f"--u/--v must have dimension {args.n}")
    name = args.product
    if name == "cross3":
        if args.n != 3:
            _fail_usage(parser, "cross3 needs --n 3")
        out = cross3(u, v)
    elif name == "cross7":
        if args.n != 7:
            _fail_usage(parser, "cross7 needs --n 7")
        out = cross7(u, v)
    elif name == "padded":
        if args.n < 3:
            _fail_usage(parser, "padded needs --n >= 3")
        out = padded_cross(u, v)
    elif name == "det":
        if args.n != 3:
            _fail_usage(
                parser,
                "the determinant product takes n-1 vectors in dimension n; "
                "with two inputs it is only defined for --n 3",
            )
        out = det_product([u, v])
    else:  # table
        k = _table_level_for_dim(args.n)
        if k is None or k > symbolic.MAX_LEVEL:
            _fail_usage(
                parser,
                f"--n {args.n} is not a table dimension (need n = 2^(k+1)-1)",
            )
        out = table_product(symbolic.build_table(k), u, v)
    return format_vector(out), 0


def _product_under_test(args, parser) -> verify.ProductUnderTest:
    name = args.product
    if name == "table":
        if args.k is None:
            _fail_usage(parser, "verify --product table needs --k")
        if not 1 <= args.k <= symbolic.MAX_LEVEL:
            _fail_usage(parser, f"--k must be in 1..{symbolic.MAX_LEVEL}")
        return verify.product_for_table(symbolic.build_table(args.k))
    if name == "cross3":
        if args.n not in (None, 3):
            _fail_usage(parser, "cross3 has dimension 3")
        return verify.cross3_product()
    if name == "cross7":
        if args.n not in (None, 7):
            _fail_usage(parser, "cross7 has dimension 7")
        return verify.cross7_product()
    if args.n is None:
        _fail_usage(parser, "verify --product padded needs --n")
    if args.n < 3:
        _fail_usage(parser, "padded needs --n >= 3")
    return verify.padded_product(args.n)


def _parse_axioms(raw: str, parser) -> List[str]:
    tokens = [t.strip() for t in raw.split(",") if t.strip()]
    if not tokens:
        _fail_usage(parser, "--axioms must name at least one axiom")
    axioms: List[str] = []
    for t in tokens:
        if t not in AXIOM_CHOICES:
            _fail_usage(
                parser, f"unknown axiom {t!r} (choose from {', '.join(AXIOM_CHOICES)})"
            )
        if t == "all":
            return ["perpendicular", "pythagorean", "bilinear", "identities"]
        axioms.append(t)
    return axioms


def cmd_verify(args, parser) -> Tuple[str, int]:
    if args.mode == DOUBLE:
        _fail_usage(parser, "verification runs in exact mode only")
    if args.samples < 1:
        _fail_usage(parser, "--samples must be >= 1")
    product = _product_under_test(args, parser)
    axioms = _parse_axioms(args.axioms, parser)

    reports: List[verify.AxiomReport] = []
    for axiom in axioms:
        if axiom == "perpendicular":
            reports.append(
                verify.check_perpendicular(product, args.samples, args.seed)
            )
        elif axiom == "pythagorean":
            reports.append(
                verify.check_pythagorean(product, args.samples, args.seed)
            )
        elif axiom == "bilinear":
            reports.append(verify.check_bilinear(product, args.samples, args.seed))
        else:
            reports.extend(verify.check_identities(product, args.samples, args.seed))

    status = 0
    for report in reports:
        expected = verify.expected_verdict(product, report.axiom)
        if expected is not None and report.verdict != expected:
            status = 1
    text = json.dumps([r.to_json_dict() for r in reports], indent=2)
    return text, status


def _support_str(v: Vector) -> str:
    """Compact signed-support form, e.g. ``e3+e10`` or ``e6-e15``."""
    parts = []
    for i, c in enumerate(v.coords, start=1):
        if not c:
            continue
        if c == 1:
            parts.append(("+" if parts else "") + f"e{i}")
        elif c == -1:
            parts.append(f"-e{i}")
        else:
            parts.append(("+" if parts and c > 0 else "") + f"{c}*e{i}")
    return "".join(parts) if parts else "0"


def cmd_counterexample(args, parser) -> Tuple[str, int]:
    if args.mode == DOUBLE:
        _fail_usage(parser, "the counterexample is computed in exact mode only")
    if args.k < 3:
        _fail_usage(
            parser,
            "the construction uses generator u3, so it needs --k >= 3 "
            "(levels 1 and 2 carry genuine cross products)",
        )
    if args.k > symbolic.MAX_LEVEL:
        _fail_usage(parser, f"--k must be <= {symbolic.MAX_LEVEL}")
    table = symbolic.build_table(args.k)
    u, v = symbolic.counterexample_vectors(args.k)
    uv = table_product(table, u, v)
    duu, dvv, duv = dot(u, u), dot(v, v), dot(u, v)
    lhs = duu * dvv
    rhs = dot(uv, uv) + duv**2
    lines = [
        f"k = {args.k}, n = {table.n}",
        f"u = {format_vector(u)}   ({_support_str(u)})",
        f"v = {format_vector(v)}   ({_support_str(v)})",
        f"u x v = {format_vector(uv)}",
        f"u . v = {duv}",
        f"u . u = {duu}",
        f"v . v = {dvv}",
        f"LHS (u.u)(v.v) = {lhs}",
        f"RHS (u x v).(u x v) + (u.v)^2 = {rhs}",
    ]
    if lhs != rhs:
        lines.append(f"verdict: Pythagorean fails ({lhs} != {rhs})")
        return "\n".join(lines), 0
    lines.append("verdict: Pythagorean holds (unexpected)")
    return "\n".join(lines), 1


def cmd_classify(args, parser) -> Tuple[str, int]:
    if args.mode == DOUBLE:
        _fail_usage(parser, "classification runs in exact mode only")
    if not 1 <= args.max_k <= 6:
        _fail_usage(parser, "--max-k must be in 1..6")
    verdicts = verify.classify_dimensions(args.max_k)
    lines = []
    status = 0
    for d in verdicts:
        if d.pythagorean_refuted:
            w = d.witness
            lines.append(
                f"k={d.k} n={d.n}: pythagorean refuted  "
                f"witness u={_support_str(w.u)} v={_support_str(w.v)} "
                f"(lhs {w.lhs}, rhs {w.rhs})"
            )
        else:
            lines.append(f"k={d.k} n={d.n}: pythagorean {d.report.verdict}")
        expected_refuted = d.k >= 3
        if d.pythagorean_refuted != expected_refuted:
            status = 1
    lines.append(
        "a cross product exists only in dimensions 0, 1, 3 and 7; "
        "in dimensions 0 and 1 the zero map is a valid cross product"
    )
    return "\n".join(lines), status


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": cmd_table,
        "cross": cmd_cross,
        "verify": cmd_verify,
        "counterexample": cmd_counterexample,
        "classify": cmd_classify,
    }
    text, status = handlers[args.command](args, parser)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
