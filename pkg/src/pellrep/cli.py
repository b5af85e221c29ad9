"""Command line front end.

Records go to stdout, one JSON object per line. Python integers are written
as decimal strings so nothing is lost to float conversion. Exit codes:
0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Any, Iterable, Optional, TextIO

from .bounds import bound_report
from .pell_core import fundamental_solution, is_square, nth_solution
from .repdigit import as_repdigit, digits
from .search import SearchConfig, classify_report, search
from .suites import (
    brackets_suite,
    elliptic_suite,
    even_case_suite,
    gcd_suite,
    lemma3_suite,
    mixed_parity_suite,
    primitive_suite,
    taylor_suite,
    valuation_suite,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("pellrep")


def _stringify(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return str(obj)


def dumps(record: dict[str, Any]) -> str:
    return json.dumps(_stringify(record), separators=(",", ":"), ensure_ascii=False)


def emit(records: Iterable[dict[str, Any]], out: TextIO) -> None:
    for rec in records:
        out.write(dumps(rec) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_pell(args: argparse.Namespace, out: TextIO) -> int:
    orbit = fundamental_solution(args.d)
    sol = nth_solution(orbit, args.n)
    emit([{"kind": "pell", "d": args.d, "n": args.n, "X": sol.X, "Y": sol.Y,
           "X1": orbit.X1, "Y1": orbit.Y1}], out)
    return EXIT_OK


def cmd_repdigit(args: argparse.Namespace, out: TextIO) -> int:
    form = as_repdigit(args.N, args.base)
    rec: dict[str, Any] = {"kind": "repdigit", "N": args.N, "b": args.base,
                           "repdigit": form is not None}
    if form is not None:
        rec.update(a=form.a, m=form.m)
    else:
        rec["digits"] = digits(args.N, args.base)
    emit([rec], out)
    return EXIT_OK


def cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    config = SearchConfig(
        b=args.base,
        d_max=args.d_max,
        n_max=args.n_max,
        m_cap=args.m_cap,
        include_m1=args.include_m1,
        shards=args.shards,
        squarefree_only=args.squarefree_only,
    )
    report = search(config)
    if args.classify:
        classify_report(report)
    if args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["d", "n", "a", "m", "X", "trivial"])
        for hit in report.hits:
            for n, a, m, X in hit.hits:
                writer.writerow([hit.d, n, a, m, X, int(hit.trivial)])
    else:
        emit((hit.to_record() for hit in report.hits), out)
    log.info("totals %s", report.totals)
    return EXIT_OK


def _bases(args: argparse.Namespace, default_max: int) -> list[int]:
    if args.base is not None:
        return [args.base]
    return list(range(2, (args.base_max or default_max) + 1))


def _pick(value: Optional[int], default: int) -> int:
    return default if value is None else value


def _run_suite(args: argparse.Namespace):
    s = args.suite
    if s == "even-case":
        return even_case_suite(_bases(args, 10), _pick(args.d_max, 500), _pick(args.n_max, 8))
    if s == "gcd":
        return gcd_suite(_pick(args.d_max, 50), _pick(args.n_max, 13),
                         _pick(args.base_max, 12), _pick(args.m_max, 12))
    if s == "taylor":
        return taylor_suite(_bases(args, 10), _pick(args.m_max, 4), _pick(args.n_max, 9))
    if s == "lemma3":
        return lemma3_suite(_pick(args.base_max, 12), _pick(args.n_max, 9))
    if s == "primitive":
        return primitive_suite(args.d or [2, 3, 5, 6, 7, 8, 10],
                               _pick(args.k_min, 13), _pick(args.k_max, 25))
    if s == "elliptic":
        return elliptic_suite(_pick(args.base_max, 10), _pick(args.x_max, 10**4),
                              _pick(args.y_max, 100))
    if s == "brackets":
        bases = [args.base] if args.base is not None else [2, 10]
        return brackets_suite(bases, list(range(100, _pick(args.m_max, 100) + 1)))
    if s == "valuation":
        return valuation_suite(_pick(args.base_max, 10), _pick(args.m_max, 1), _pick(args.n_max, 9))
    if s == "mixed-parity":
        return mixed_parity_suite(_pick(args.base_max, 20))
    raise AssertionError(s)


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    checks = _run_suite(args)
    failed = [c for c in checks if not c.ok]
    shown = checks if args.all else failed
    emit((c.to_record() for c in shown), out)
    emit([{"kind": "verify", "check": "summary", "suite": args.suite, "ok": not failed,
           "cases": len(checks), "failed": len(failed)}], out)
    return EXIT_FALSIFIED if failed else EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: TextIO) -> int:
    emit([bound_report(args.base).to_record()], out)
    return EXIT_OK


SUITE_NAMES = ["even-case", "gcd", "taylor", "lemma3", "primitive", "elliptic",
               "brackets", "valuation", "mixed-parity"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pellrep", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pell", help="n-th solution of X^2 - dY^2 = 1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_pell)

    p = sub.add_parser("repdigit", help="repdigit decomposition of N in base b")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--base", type=int, default=10)
    p.set_defaults(func=cmd_repdigit)

    p = sub.add_parser("search", help="moduli d with two repdigit X-coordinates")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-cap", type=int, default=10**6)
    p.add_argument("--include-m1", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--squarefree-only", action="store_true")
    p.add_argument("--classify", action="store_true", help="attach structural annotations")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="run a structural verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--base", type=int)
    p.add_argument("--base-max", type=int)
    p.add_argument("--d-max", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--x-max", type=int)
    p.add_argument("--y-max", type=int)
    p.add_argument("--d", type=int, action="append", help="modulus (repeatable)")
    p.add_argument("--all", action="store_true", help="emit passing cases too")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="explicit bound chain for base b")
    p.add_argument("--base", type=int, required=True)
    p.set_defaults(func=cmd_bounds)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    for name in ("base", "base_max"):
        v = getattr(args, name, None)
        if v is not None and v < 2:
            parser.error(f"--{name.replace('_', '-')} must be >= 2")
    for name in ("d_max", "n_max", "m_max", "m_cap", "shards", "k_min", "k_max", "x_max", "y_max", "n"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            parser.error(f"--{name.replace('_', '-')} must be >= 1")
    if args.command == "pell" and (args.d < 2 or is_square(args.d)):
        parser.error(f"--d {args.d} must be a nonsquare integer >= 2")
    if args.command == "search" and args.d_max < 2:
        parser.error("--d-max must be >= 2")
    if args.command == "repdigit" and args.N < 1:
        parser.error("--N must be positive")
    if args.command == "verify" and args.suite == "mixed-parity" and args.base is not None and args.base % 2:
        parser.error("mixed-parity needs an even base")


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    _validate(parser, args)
    try:
        return args.func(args, out or sys.stdout)
    except ValueError as exc:
        parser.error(str(exc))
    return EXIT_USAGE  # unreachable; parser.error exits


if __name__ == "__main__":
    sys.exit(main())
