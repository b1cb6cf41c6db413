"""Command-line surface: compute, table, verify, parity, bench.

Exit codes: 0 success, 1 verification or cross-method disagreement,
2 usage error.  Environment defaults: PARTREC_DEFAULT_MAX, PARTREC_DEFAULT_FORMAT.
Big integers are printed as decimal strings in json output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import counting, verify
from .counting import FAMILIES, FAMILY_METHODS, PARITY_METHODS

FORMATS = ("plain", "csv", "json")
BENCH_TABLE_METHODS = {"euler": "recurrence", "gf": "gf"}

ENV_DEFAULT_MAX = "PARTREC_DEFAULT_MAX"
ENV_DEFAULT_FORMAT = "PARTREC_DEFAULT_FORMAT"


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partrec",
        description="Partition counting functions, recurrence and series "
                    "identity verification, parity queries, benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="print one exact value f(n)")
    c.add_argument("--function", required=True, choices=FAMILIES)
    c.add_argument("--n", required=True, type=_nonneg)
    c.add_argument("--method", default=None,
                   help="computation route where the family has several "
                        "(p: recurrence|gf, p2: convolution|gf, v: recurrence|gf)")

    t = sub.add_parser("table", help="print f(0..max) as rows")
    t.add_argument("--function", required=True, choices=FAMILIES)
    t.add_argument("--max", type=_nonneg, default=None)
    t.add_argument("--method", default=None)
    t.add_argument("--format", default=None)

    v = sub.add_parser("verify", help="run registered identity checks")
    v.add_argument("--check", default="all",
                   help="check name or 'all' (see --list)")
    v.add_argument("--max", type=_nonneg, default=None,
                   help="bound override; per-check defaults otherwise")
    v.add_argument("--format", default=None)
    v.add_argument("--list", action="store_true",
                   help="list registered checks and exit")

    p = sub.add_parser("parity", help="print p(n) mod 2")
    p.add_argument("--n", required=True, type=_nonneg)
    p.add_argument("--method", default="macmahon", choices=PARITY_METHODS)

    b = sub.add_parser("bench", help="time table and parity methods, "
                                     "verifying cross-method agreement")
    b.add_argument("--max", type=_nonneg, default=None)
    b.add_argument("--methods", default="euler,gf",
                   help="comma-separated subset of: euler, gf")
    b.add_argument("--format", default=None)
    return parser


def _resolve_format(args, parser: argparse.ArgumentParser) -> str:
    fmt = args.format if args.format is not None else os.environ.get(ENV_DEFAULT_FORMAT)
    if fmt is None:
        return "plain"
    if fmt not in FORMATS:
        parser.error(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")
    return fmt


def _resolve_max(args, parser: argparse.ArgumentParser,
                 required: bool = True) -> int | None:
    if args.max is not None:
        return args.max
    env = os.environ.get(ENV_DEFAULT_MAX)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            value = -1
        if value < 0:
            parser.error(f"invalid {ENV_DEFAULT_MAX}={env!r}")
        return value
    if required:
        parser.error(f"--max is required (or set {ENV_DEFAULT_MAX})")
    return None


def _resolve_method(family: str, method: str | None,
                    parser: argparse.ArgumentParser) -> str | None:
    if method is not None and method not in FAMILY_METHODS[family]:
        parser.error(f"family {family!r} has no method {method!r} "
                     f"(available: {', '.join(FAMILY_METHODS[family])})")
    return method


def _cmd_compute(args, parser) -> int:
    method = _resolve_method(args.function, args.method, parser)
    table = counting.build_table(args.function, args.n, method)
    print(table[args.n])
    return 0


def _cmd_table(args, parser) -> int:
    fmt = _resolve_format(args, parser)
    max_n = _resolve_max(args, parser)
    method = _resolve_method(args.function, args.method, parser)
    table = counting.build_table(args.function, max_n, method)
    if fmt == "csv":
        print("n,value")
        for n, value in enumerate(table.values):
            print(f"{n},{value}")
    elif fmt == "json":
        for n, value in enumerate(table.values):
            print(json.dumps({"n": n, "value": str(value)}))
    else:
        for value in table.values:
            print(value)
    return 0


def _cmd_verify(args, parser) -> int:
    if args.list:
        for name, spec in verify.CHECKS.items():
            print(f"{name}: {spec.description} (default bound {spec.bound_default})")
        return 0
    fmt = _resolve_format(args, parser)
    bound = _resolve_max(args, parser, required=False)
    if args.check == "all":
        names = verify.check_names()
    elif args.check in verify.CHECKS:
        names = [args.check]
    else:
        parser.error(f"unknown check {args.check!r} "
                     f"(available: all, {', '.join(verify.CHECKS)})")
    tables = verify.TableSet()
    ok = True
    if fmt == "csv":
        print("name,bound,status,n,lhs,rhs")
    for name in names:
        result = verify.run_check(name, bound, tables)
        ok = ok and result.passed
        if fmt == "json":
            print(json.dumps(result.to_json()))
        elif fmt == "csv":
            if result.passed:
                print(f"{result.name},{result.bound},pass,,,")
            else:
                print(f"{result.name},{result.bound},fail,"
                      f"{result.failed_at},{result.lhs},{result.rhs}")
        else:
            print(result.describe())
    return 0 if ok else 1


def _cmd_parity(args, parser) -> int:
    print(counting.parity_p(args.n, args.method))
    return 0


def _checksum(values) -> int:
    return sum(values) % (1 << 64)


def _cmd_bench(args, parser) -> int:
    fmt = _resolve_format(args, parser)
    max_n = _resolve_max(args, parser)
    methods = [m for m in (s.strip() for s in args.methods.split(",")) if m]
    unknown = [m for m in methods if m not in BENCH_TABLE_METHODS]
    if unknown or not methods:
        parser.error(f"--methods must be a nonempty subset of "
                     f"{', '.join(BENCH_TABLE_METHODS)}")

    table_runs = []
    for method in methods:
        start = time.perf_counter()
        table = counting.p_table(max_n, BENCH_TABLE_METHODS[method])
        elapsed = time.perf_counter() - start
        table_runs.append((method, elapsed, table.values))

    parity_runs = []
    for method in PARITY_METHODS:
        start = time.perf_counter()
        bits = [counting.parity_p(n, method) for n in range(max_n + 1)]
        elapsed = time.perf_counter() - start
        parity_runs.append((method, elapsed, bits))

    # all methods must agree before any timing is reported
    for name, _, values in table_runs[1:]:
        for n, (a, b) in enumerate(zip(table_runs[0][2], values)):
            if a != b:
                print(f"bench: table methods disagree at n={n}: "
                      f"{table_runs[0][0]}={a} {name}={b}", file=sys.stderr)
                return 1
    reference_bits = [v & 1 for v in table_runs[0][2]]
    for name, _, bits in parity_runs:
        for n, (a, b) in enumerate(zip(reference_bits, bits)):
            if a != b:
                print(f"bench: parity method {name} disagrees at n={n}: "
                      f"table={a} {name}={b}", file=sys.stderr)
                return 1

    rows = [("table-p", m, dt, _checksum(vals)) for m, dt, vals in table_runs]
    rows += [("parity", m, dt, _checksum(bits)) for m, dt, bits in parity_runs]
    if fmt == "json":
        for kind, method, dt, chk in rows:
            print(json.dumps({"kind": kind, "method": method, "max": max_n,
                              "seconds": round(dt, 6), "checksum": str(chk)}))
        print(json.dumps({"kind": "agreement", "status": "ok"}))
    elif fmt == "csv":
        print("kind,method,seconds,checksum")
        for kind, method, dt, chk in rows:
            print(f"{kind},{method},{dt:.6f},{chk}")
    else:
        print(f"bench max={max_n}")
        for kind, method, dt, chk in rows:
            print(f"{kind} {method}: {dt:.3f}s checksum={chk}")
        print("agreement: ok")
    return 0


_HANDLERS = {
    "compute": _cmd_compute,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "parity": _cmd_parity,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](args, parser)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
