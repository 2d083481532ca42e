"""Command-line front end.

List output is JSON lines; ``catalog`` prints markdown or CSV.  Exit codes:
0 success, 1 a negative answer (not representable, failed check), 2 usage
error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .catalog import (
    DEFAULT_MAX_LEN,
    DEFAULT_ORACLE_DEGREE,
    build_catalog,
    render,
    scan_exceptions,
)
from .families import detect_families, gen_100, gen_3n2
from .newman import Universal, format_poly
from .numeric import TernaryString, feasible_interval, normalize
from .oracle import MAX_DEGREE, brute_force, cross_check
from .representations import (
    Representation,
    VerificationError,
    enumerate_indecomposable,
    enumerate_representations,
)
from .transducer import build_digraph, export_dot, is_representable

CACHE_ENV = "TERNQUOT_CACHE_DIR"


def nat(text: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise argparse.ArgumentTypeError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def positive(text: str) -> int:
    n = nat(text)
    if n < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return n


def ternary(text: str) -> TernaryString:
    try:
        return TernaryString.from_msb(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(rec: dict) -> None:
    print(json.dumps(rec, ensure_ascii=False))


def _domain_problem(m: int) -> Optional[str]:
    """Why ``m`` cannot be enumerated directly, or None."""
    if m % 3 == 2:
        return "m = 2 (mod 3)"
    if m % 3 == 0:
        k, m1 = normalize(m)
        return f"m = 3^{k} * {m1}; representations of m are those of {m1} with p shifted"
    if feasible_interval(m) is None:
        return "m lies outside every feasible interval"
    return None


def cmd_decide(args: argparse.Namespace) -> int:
    m = args.m
    k, m1 = normalize(m)
    if m1 % 3 == 2:
        print(f"{m} is not representable: {m1} = 2 (mod 3)")
        return 1
    if feasible_interval(m1) is None:
        print(f"{m} is not representable: {m1} lies outside every feasible interval")
        return 1
    if not is_representable(m1):
        print(f"{m} is not representable: no walk in D_{m1} returns to 0")
        return 1
    g = build_digraph(m1)
    rep = enumerate_indecomposable(m1, g.dist_to_zero[g.t] + 1)[0]
    p_digits = rep.p.msb() + "0" * k
    p_val = rep.p.value * 3**k
    print(f"{m} is representable: {m} = [{p_digits}]_3/[{rep.q.msb()}]_3 = {p_val}/{rep.q.value}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    problem = _domain_problem(args.m)
    if problem:
        _emit({"m": str(args.m), "representable": False if args.m % 3 == 2 else None, "reason": problem})
        return 0
    if args.decomposable:
        reps = enumerate_representations(args.m, args.max_len)
    else:
        reps = enumerate_indecomposable(args.m, args.max_len)
    for rep in reps:
        _emit(rep.to_record())
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        rep = Representation(args.m, args.p, args.q)
    except VerificationError:
        print(f"invalid: {args.p.value} != {args.m} * {args.q.value}")
        return 1
    c = rep.classification
    if isinstance(c, Universal):
        print(f"universal {format_poly(c.quotient)}")
    else:
        print("local")
    return 0


def cmd_digraph(args: argparse.Namespace) -> int:
    if args.m % 3 != 1:
        print(f"D_m is defined only for m = 1 (mod 3), got {args.m}", file=sys.stderr)
        return 1
    text = export_dot(build_digraph(args.m), pruned=args.pruned)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    return 0


def cmd_families(args: argparse.Namespace) -> int:
    for tag in detect_families(args.m):
        _emit({"m": str(args.m), "family": tag.render(), "quotient": format_poly(tag.quotient())})
    return 0


def cmd_gen_3n2(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise argparse.ArgumentTypeError("n must be at least 3")
    _emit(gen_3n2(args.n, args.k).to_record())
    return 0


def cmd_gen_100(args: argparse.Namespace) -> int:
    _emit(gen_100(args.j).to_record())
    return 0


def _cache_path(args: argparse.Namespace) -> Optional[Path]:
    if args.cache:
        return Path(args.cache)
    env = os.environ.get(CACHE_ENV)
    return Path(env) / "catalog.json" if env else None


def cmd_catalog(args: argparse.Namespace) -> int:
    rows = build_catalog(
        args.max_m, args.max_len, args.oracle_degree, cache=_cache_path(args), workers=args.threads
    )
    sys.stdout.write(render(rows, args.format))
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    for m in scan_exceptions(args.max_m, workers=args.threads):
        _emit({"m": str(m), "representable": False})
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    problem = _domain_problem(args.m)
    if problem:
        _emit({"m": str(args.m), "representable": False if args.m % 3 == 2 else None, "reason": problem})
        return 0
    for hit in brute_force(args.m, args.max_degree):
        _emit(hit.to_record(args.m))
    return 0


def cmd_cross_check(args: argparse.Namespace) -> int:
    problem = _domain_problem(args.m)
    if problem and args.m % 3 != 1:
        _emit({"m": str(args.m), "ok": None, "reason": problem})
        return 0
    report = cross_check(args.m, args.max_degree, args.max_len)
    _emit(report.to_record())
    return 0 if report.ok else 1


def oracle_degree(text: str) -> int:
    n = nat(text)
    if n > MAX_DEGREE:
        raise argparse.ArgumentTypeError(f"oracle degree is capped at {MAX_DEGREE}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ternquot",
        description="Integers as quotients of sums of distinct powers of 3.",
    )
    parser.add_argument("--version", action="store_true", help="print version to stderr and exit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("decide", help="is m representable? exit 0 yes, 1 no")
    p.add_argument("m", type=positive)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("enumerate", help="representations of m as JSON lines")
    p.add_argument("m", type=positive)
    p.add_argument("--max-len", type=positive, required=True, help="max digits of p")
    p.add_argument("--decomposable", action="store_true", help="include concatenated walks")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="universal or local, for MSB-first 0/1 strings p, q")
    p.add_argument("m", type=positive)
    p.add_argument("p", type=ternary)
    p.add_argument("q", type=ternary)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("digraph", help="write D_m as Graphviz DOT")
    p.add_argument("m", type=positive)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--full", dest="pruned", action="store_false", help="whole forward closure (default)")
    mode.add_argument("--pruned", dest="pruned", action="store_true", help="only vertices that return to 0")
    p.add_argument("--out", help="output file, '-' for stdout")
    p.set_defaults(func=cmd_digraph, pruned=False)

    p = sub.add_parser("families", help="only-universal families containing m")
    p.add_argument("m", type=positive)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("gen-3n2", help="k-th closed-form representation of 3^n - 2")
    p.add_argument("n", type=nat)
    p.add_argument("k", type=nat)
    p.set_defaults(func=cmd_gen_3n2)

    p = sub.add_parser("gen-100", help="j-th indecomposable representation of 100")
    p.add_argument("j", type=nat)
    p.set_defaults(func=cmd_gen_100)

    p = sub.add_parser("catalog", help="universal/local table for feasible m <= M")
    p.add_argument("--max-m", type=positive, required=True)
    p.add_argument("--max-len", type=positive, default=DEFAULT_MAX_LEN)
    p.add_argument("--oracle-degree", type=oracle_degree, default=DEFAULT_ORACLE_DEGREE)
    p.add_argument("--format", choices=["md", "csv"], default="md")
    p.add_argument("--cache", help=f"JSON cache file (default: ${CACHE_ENV}/catalog.json)")
    p.add_argument("--threads", type=positive, default=1)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("scan", help="feasible m <= M with no representation")
    p.add_argument("--max-m", type=positive, required=True)
    p.add_argument("--threads", type=positive, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("oracle", help="brute-force search over Newman polynomials")
    p.add_argument("m", type=positive)
    p.add_argument("--max-degree", type=oracle_degree, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("cross-check", help="compare oracle with the transducer")
    p.add_argument("m", type=positive)
    p.add_argument("--max-degree", type=oracle_degree, required=True)
    p.add_argument("--max-len", type=positive, required=True)
    p.set_defaults(func=cmd_cross_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        print(f"ternquot {__version__}", file=sys.stderr)
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"ternquot: I/O error: {exc}", file=sys.stderr)
        return 3
    return 0


def run(argv: List[str]) -> int:
    """Like :func:`main` but returns 2 instead of raising on usage errors."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
