"""Command line front end: ``quadprime {test,search,mr2,carmichael,bench}``.

Exit codes for verdicts: 0 Prime, 1 Composite, 2 StrongProbablePrime or
Inconclusive, 3 NotApplicable. Bad flags exit with 64, unwritable output
with 73.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import statistics
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from .carmichael import FACTOR_BOUND, korselt_check, search_carmichael
from .engine import DEFAULT_RETRIES, Verdict, default_multiplier, mr2_search, mr2_test
from .group import GroupElement
from .records import run_one, write_csv, write_jsonl
from .ring import QuadraticContext

log = logging.getLogger("quadprime")

EXIT_USAGE = 64
EXIT_CANTCREAT = 73
SEED_ENV = "QUADPRIME_SEED"

EXIT_CODES = {
    Verdict.PRIME: 0,
    Verdict.COMPOSITE: 1,
    Verdict.STRONG_PROBABLE_PRIME: 2,
    Verdict.INCONCLUSIVE: 2,
    Verdict.NOT_APPLICABLE: 3,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get(SEED_ENV)
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={env!r} is not an integer")


def _multiplier(args) -> int:
    if args.m is not None:
        return args.m
    if args.cd is not None:
        return args.cd * args.k
    if args.D < 0:
        return default_multiplier(args.D) * args.k
    raise UsageError("D > 0 needs an explicit multiplier: pass --cd or -m")


def _form_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("-D", type=int, required=True, help="square-free discriminant")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("-p", type=int, required=True, help="odd prime")
    p.add_argument("-m", type=int, help="use this full cofactor m instead of c_D*k")
    p.add_argument("--cd", type=int, help="fixed multiplier c_D (needed for D > 0)")
    p.add_argument("--seed", type=int, help=f"base draw seed (default ${SEED_ENV} or 0)")
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def cmd_test(args) -> int:
    seed = _resolve_seed(args.seed)
    k = None if args.m is not None else args.k
    rec = run_one(args.D, _multiplier(args), args.p, args.l, seed=seed, retries=args.retries, k=k)
    print(rec.to_json() if args.json else rec.describe())
    return EXIT_CODES[Verdict(rec.verdict)]


def cmd_search(args) -> int:
    seed = _resolve_seed(args.seed)
    m = _multiplier(args)
    k = None if args.m is not None else args.k
    ls = list(range(args.lmin, args.lmax + 1))
    job = partial(_search_one, args.D, m, args.p, seed=seed, retries=args.retries, k=k)
    if args.jobs > 1 and ls:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(job, ls))
    else:
        records = [job(l) for l in ls]
    if args.primes_only:
        records = [r for r in records if r.verdict == Verdict.PRIME.value]
    try:
        out = _open_out(args.output)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    try:
        if args.format == "csv":
            write_csv(records, out)
        elif args.format == "json":
            write_jsonl(records, out)
        else:
            for rec in records:
                out.write(rec.describe() + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _search_one(D, m, p, l, *, seed, retries, k):
    return run_one(D, m, p, l, seed=seed, retries=retries, k=k)


def cmd_mr2(args) -> int:
    seed = _resolve_seed(args.seed)
    ctx = QuadraticContext(args.D, args.N)
    if args.base is not None and ctx.jacobi_DN == -1:
        try:
            w = GroupElement(ctx, *args.base)
        except ValueError as exc:
            raise UsageError(str(exc))
        outcome = mr2_test(args.N, args.D, w)
    else:
        outcome = mr2_search(args.N, args.D, trials=args.trials, seed=seed)
    payload = {
        "N": args.N,
        "D": args.D,
        "jacobi": ctx.jacobi_DN,
        "verdict": outcome.verdict.value,
        "witness": outcome.witness.value if outcome.witness else None,
        "factor": outcome.factor,
        "bases_tried": outcome.bases_tried,
        "base": list(outcome.base) if outcome.base is not None else None,
        "seed": seed,
    }
    if "powers" in outcome.trace:
        payload["u"] = outcome.trace["u"]
        payload["s"] = outcome.trace["s"]
        payload["powers"] = [list(x) for x in outcome.trace["powers"]]
    if args.json:
        print(json.dumps(payload))
    else:
        line = f"N = {args.N}, D = {args.D}, (D/N) = {ctx.jacobi_DN}: {outcome.verdict.value}"
        if outcome.reason:
            line += f" ({outcome.reason})"
        if outcome.base is not None:
            line += f" base {outcome.base}"
        print(line)
    return EXIT_CODES[outcome.verdict]


def cmd_carmichael(args) -> int:
    found = search_carmichael(args.lo, args.hi, args.D, bound=args.bound, jobs=args.jobs)
    try:
        out = _open_out(args.output)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_CANTCREAT
    try:
        if args.json:
            for n in found:
                out.write(json.dumps(korselt_check(n, args.D, args.bound).to_dict()) + "\n")
        else:
            out.write(" ".join(map(str, found)) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_bench(args) -> int:
    if args.reps < 1:
        raise UsageError("--reps must be at least 1")
    seed = _resolve_seed(args.seed)
    m = _multiplier(args)
    medians = {}
    rows = []
    for l in args.l:
        runs = [run_one(args.D, m, args.p, l, seed=seed, retries=args.retries) for _ in range(args.reps)]
        medians[l] = statistics.median(r.elapsed_seconds for r in runs)
        rows.append({"l": l, "bits": runs[0].bit_size, "verdict": runs[0].verdict, "median_seconds": medians[l]})
    ratios = [
        {"l": l, "ratio": medians[2 * l] / medians[l] if medians[l] > 0 else None}
        for l in sorted(medians)
        if 2 * l in medians
    ]
    if args.json:
        print(json.dumps({"D": args.D, "p": args.p, "m": m, "reps": args.reps, "rows": rows, "ratios": ratios}))
    else:
        for row in rows:
            print(f"l = {row['l']:>5}  bits = {row['bits']:>6}  {row['verdict']:<20} median {row['median_seconds']:.6f} s")
        for r in ratios:
            value = "n/a" if r["ratio"] is None else f"{r['ratio']:.2f}"
            print(f"t({2 * r['l']})/t({r['l']}) = {value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadprime", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="certify one N = m p^l - 1")
    _form_flags(p)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("search", help="run the test over a range of l")
    _form_flags(p)
    p.add_argument("--lmin", type=int, default=1)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("mr2", help="Miller-Rabin analogue for N + 1 = 2^s u")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-D", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int)
    p.add_argument("--base", type=int, nargs=2, metavar=("A", "B"), help="explicit base A + B sqrt(D)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mr2)

    p = sub.add_parser("carmichael", help="search G(D)-Carmichael numbers")
    p.add_argument("--lo", type=int, required=True)
    p.add_argument("--hi", type=int, required=True)
    p.add_argument("-D", type=int, required=True)
    p.add_argument("--bound", type=int, default=FACTOR_BOUND)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_carmichael)

    p = sub.add_parser("bench", help="median timings and t(2l)/t(l) ratios")
    _form_flags(p)
    p.add_argument("-l", type=int, nargs="+", required=True)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"quadprime: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"quadprime: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
