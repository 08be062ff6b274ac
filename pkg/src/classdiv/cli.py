"""Command line entry point: verify, table, search, solve-bs, classnum."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .arith import FactorizationExhausted
from .classgroup import Method, class_number
from .diophantine import DEFAULT_Y_BOUND, BSInstance, solve_bs
from .fieldparams import InvalidParams
from .quadform import DiscriminantError
from .table import (
    CACHE_ENV,
    RowCache,
    bundled_paper_csv,
    compute_rows,
    default_cache_path,
    enumerate_triples,
    join_paper,
    load_paper_table,
    render_csv,
    render_json,
    summarize,
    write_atomic,
)
from .theorem import HypothesisError, Verdict, search_primes, verify_theorem1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTE = 2
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _verdict_lines(v: Verdict) -> list[str]:
    p = v.params
    lines = [
        f"a={p.a} p={p.p} n={p.n}",
        f"  a^2-4p^n = {p.signed_value} = -{p.c}^2 * {p.d}",
        f"  condition (i):  {'holds' if v.cond_i.holds else 'fails'}"
        + (f"  witnesses={list(v.cond_i.witnesses)}" if v.cond_i.witnesses else "")
        + ("  (d = 3)" if v.cond_i.d_excluded else ""),
        f"  condition (ii): {'holds' if v.cond_ii.holds else 'fails'}"
        + (f"  witnesses={list(v.cond_ii.witnesses)}" if v.cond_ii.witnesses else ""),
        f"  exceptional: {'yes' if v.exceptional else 'no'}",
        f"  order of prime class above p: {v.order_of_class}",
    ]
    if v.class_number is not None:
        lines.append(f"  h(-{p.d}) = {v.class_number}  (n | h: {'yes' if v.n_divides_h else 'no'})")
    if v.subgroup_verified:
        status = f"Z/{p.n}Z subgroup verified"
    elif v.exceptional:
        status = "exceptional triple: no order-n class, as expected"
    elif v.violates_theorem:
        status = "VIOLATION: conditions hold but order != n"
    else:
        status = "order != n (conditions fail, no claim made)"
    lines.append(f"  {status}")
    return lines


def cmd_verify(args) -> int:
    v = verify_theorem1(args.a, args.p, args.n, compute_h=args.class_number)
    if args.json:
        print(json.dumps(v.to_dict(), indent=2))
    else:
        print("\n".join(_verdict_lines(v)))
    return EXIT_VIOLATION if v.violates_theorem else EXIT_OK


def cmd_table(args) -> int:
    for name in ("a_max", "p_max", "n_max"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if args.d_max is not None and args.d_max < 0:
        raise UsageError("--d-max must be >= 0")
    t0 = time.perf_counter()
    keys = enumerate_triples(args.a_max, args.p_max, args.n_max, args.d_max)
    cache = RowCache(args.cache_path or default_cache_path()) if args.cache else None
    rows = compute_rows(keys, jobs=args.jobs, cache=cache)
    if args.paper_csv:
        rows = join_paper(rows, load_paper_table(args.paper_csv))
    text = render_csv(rows) if args.format == "csv" else render_json(rows)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    s = summarize(rows)
    err = sys.stderr
    print(f"rows: {s['rows']}  exceptional: {s['exceptional']}  order == n: {s['order_equals_n']}", file=err)
    if args.paper_csv:
        print(f"joined with reference: {s['joined']}  matches: {s['matches']}", file=err)
        for key in s["known_discrepancies"]:
            print(f"known paper discrepancy: (n,a,p)={key}", file=err)
        for key in s["regressions"]:
            print(f"REGRESSION: (n,a,p)={key}", file=err)
    print(f"elapsed: {time.perf_counter() - t0:.2f}s", file=err)
    if any(r.order != r.n and (r.cond_i or r.cond_ii) and not r.exceptional for r in rows):
        return EXIT_VIOLATION
    return EXIT_COMPUTE if s["regressions"] else EXIT_OK


def cmd_search(args) -> int:
    results = search_primes(args.a, args.n, args.p_max, compute_h=args.class_number)
    verified = sum(v.subgroup_verified for _, v in results)
    if args.json:
        print(json.dumps({"results": [v.to_dict() for _, v in results],
                          "verified": verified, "total": len(results)}, indent=2))
    else:
        for p, v in results:
            tag = "verified" if v.subgroup_verified else ("exceptional" if v.exceptional else "not verified")
            h = f" h={v.class_number}" if v.class_number is not None else ""
            print(f"p={p:<6} d={v.params.d:<14} order={v.order_of_class:<4}{h} {tag}")
        print(f"verified {verified}/{len(results)}")
    return EXIT_VIOLATION if any(v.violates_theorem for _, v in results) else EXIT_OK


def cmd_solve_bs(args) -> int:
    try:
        inst = BSInstance(args.d1, args.d2, args.lambda_sq, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sol = solve_bs(inst, args.y_bound)
    tags = sorted(t.value for t in sol.classification)
    if args.json:
        print(json.dumps({"d1": inst.d1, "d2": inst.d2, "lambda_sq": inst.lambda_sq, "p": inst.p,
                          "y_bound": sol.y_bound, "solutions": [list(s) for s in sol.solutions],
                          "tags": tags}, indent=2))
    else:
        print(f"{inst.d1} x^2 + {inst.d2} = {inst.lambda_sq} * {inst.p}^y,  y <= {sol.y_bound}")
        for x, y in sol.solutions:
            print(f"  (x, y) = ({x}, {y})")
        if not sol.solutions:
            print("  no solutions")
        print(f"  tags: {', '.join(tags) if tags else 'none'}")
    return EXIT_OK


def cmd_classnum(args) -> int:
    method = Method.ENUM_BY_A if args.method == "A" else Method.ENUM_BY_B
    res = class_number(args.delta, method)
    if args.json:
        print(json.dumps({"delta": res.delta, "h": res.h, "method": res.method.value}))
    else:
        print(res.h)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="classdiv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="order of the prime class for one (a, p, n)")
    v.add_argument("a", type=int)
    v.add_argument("p", type=int)
    v.add_argument("n", type=int)
    v.add_argument("--class-number", action="store_true", help="also compute h(-d)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="enumerate (n, a, p) rows")
    t.add_argument("--a-max", type=int, default=15)
    t.add_argument("--p-max", type=int, default=13)
    t.add_argument("--n-max", type=int, default=9)
    t.add_argument("--d-max", type=int, default=None)
    t.add_argument("--paper-csv", nargs="?", const=str(bundled_paper_csv()), default=None,
                   help="reference table to join on (n, a, p); bare flag uses the bundled copy")
    t.add_argument("--out", default=None)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    t.add_argument("--cache", action="store_true", help=f"reuse rows from the JSONL cache (path: --cache-path or ${CACHE_ENV})")
    t.add_argument("--cache-path", default=None)
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("search", help="all primes p <= P for fixed (a, n)")
    s.add_argument("a", type=int)
    s.add_argument("n", type=int)
    s.add_argument("p_max", type=int)
    s.add_argument("--class-number", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    b = sub.add_parser("solve-bs", help="solve D1 x^2 + D2 = lambda^2 p^y")
    b.add_argument("d1", type=int)
    b.add_argument("d2", type=int)
    b.add_argument("lambda_sq", type=int, help="lambda squared: 1, 2 or 4")
    b.add_argument("p", type=int)
    b.add_argument("--y-bound", type=int, default=DEFAULT_Y_BOUND)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_solve_bs)

    c = sub.add_parser("classnum", help="class number of a negative discriminant")
    c.add_argument("delta", type=int)
    c.add_argument("--method", choices=("A", "B"), default="A")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classnum)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParams, HypothesisError, DiscriminantError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FactorizationExhausted, ArithmeticError, OSError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
