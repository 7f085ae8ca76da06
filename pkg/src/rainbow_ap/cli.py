"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 node budget exceeded,
4 verification failure, 5 cache integrity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .cache import Cache, CacheIntegrityError, job_key
from .formulas import closed_form_count
from .numbers import Structure
from .orbits import orbit_decompose
from .search import (CACHED, DEFAULT_BUDGET, EXHAUSTIVE, FORMULA, SYMMETRY, BudgetExceeded,
                     CountReport, compute_aw, count_exact_color, count_rainbow_free)
from .verify import CAMPAIGNS

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY, EXIT_CACHE = 0, 2, 3, 4, 5

METHODS = {"dfs": EXHAUSTIVE, "sym": SYMMETRY, "formula": FORMULA}


class UsageError(ValueError):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected n,p but got {text!r}")
    return parts[0], parts[1]


def _structure_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--interval", type=_positive, metavar="N", help="the interval [N]")
    g.add_argument("--cyclic", type=_positive, metavar="N", help="the cyclic group Z_N")
    sub = p.add_mutually_exclusive_group()
    sub.add_argument("--minus", type=_int_list, metavar="LIST", help="elements to remove")
    sub.add_argument("--elements", type=_int_list, metavar="LIST",
                     help="explicit support (subset of the ambient structure)")


def _run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-k", type=int, default=3, help="progression length (default 3)")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="DFS node budget")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbow-ap",
                                     description="Exact counts of rainbow 3-AP-free colorings.")
    parser.add_argument("--version", action="version", version=__version__)
    cmds = parser.add_subparsers(dest="command", required=True)

    c = cmds.add_parser("count", help="count rainbow-free r-colorings")
    _structure_args(c)
    _run_args(c)
    c.add_argument("-r", type=_positive, required=True, help="number of colors")
    c.add_argument("--method", choices=sorted(METHODS), default="sym")
    c.add_argument("--exact", type=_positive, metavar="S",
                   help="count colorings onto one fixed set of S colors instead")
    c.add_argument("--cache", metavar="PATH")
    c.add_argument("--refresh", action="store_true",
                   help="recompute even when cached and check against the cache")

    a = cmds.add_parser("aw", help="anti-van der Waerden number")
    _structure_args(a)
    _run_args(a)

    o = cmds.add_parser("orbits", help="doubling/negation orbits of Z_p")
    o.add_argument("p", type=_positive)
    o.add_argument("--format", choices=("json", "csv", "text"), default="json")

    v = cmds.add_parser("verify", help="run verification campaigns")
    for name in CAMPAIGNS:
        v.add_argument(f"--{name}", action="store_true")
    v.add_argument("--all", action="store_true")
    v.add_argument("--max-p", type=_positive)
    v.add_argument("--max-n", type=_positive)
    v.add_argument("-r", type=_positive, nargs="+")
    v.add_argument("--pairs", type=_pair, nargs="+", metavar="N,P")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instances", type=_positive)
    v.add_argument("--workers", type=_positive, default=1)
    v.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    v.add_argument("--format", choices=("json", "text"), default="text")

    b = cmds.add_parser("bench", help="time a fixed set of searches")
    b.add_argument("--workers", type=_positive, default=1)
    b.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def structure_from_args(args) -> Structure:
    try:
        if args.interval is not None:
            s = Structure.interval(args.interval)
        else:
            s = Structure.cyclic(args.cyclic)
        if args.elements is not None:
            s = Structure(s.kind, s.n, tuple(args.elements))
        elif args.minus:
            s = s.minus(args.minus)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return s


def _dumps(d: dict) -> str:
    return json.dumps(d, sort_keys=True)


def _emit_count(rep: CountReport, fmt: str, out) -> None:
    if fmt == "json":
        print(_dumps(rep.to_dict()), file=out)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "count", "method", "elapsed_ms"])
        key = job_key(rep.structure.key(), rep.r, rep.k, rep.exact_colors)
        w.writerow([key, str(rep.count), rep.method, f"{rep.elapsed * 1000:.3f}"])
        out.write(buf.getvalue())
    else:
        extra = f" exact={rep.exact_colors}" if rep.exact_colors is not None else ""
        print(f"{rep.structure.key()} r={rep.r} k={rep.k}{extra}: {rep.count} "
              f"[{rep.method}, {rep.nodes} nodes, {rep.elapsed * 1000:.1f} ms]", file=out)


def cmd_count(args, out=sys.stdout) -> int:
    s = structure_from_args(args)
    if args.exact is not None and args.exact > args.r:
        raise UsageError("--exact cannot exceed -r")
    if args.k < 3:
        raise UsageError("-k must be at least 3")
    key = job_key(s.key(), args.r, args.k, args.exact)
    cache = Cache(args.cache) if args.cache else None
    if cache is not None and not args.refresh:
        rec = cache.lookup(key)
        if rec is not None:
            rep = CountReport(s, args.r, args.k, rec.count, CACHED, exact_colors=args.exact)
            _emit_count(rep, args.format, out)
            return EXIT_OK
    method = METHODS[args.method]
    opts = {"budget": args.budget, "workers": args.workers}
    if method == FORMULA:
        if args.exact is not None:
            raise UsageError("no closed form for exact-color counts; use --method dfs or sym")
        t0 = time.perf_counter()
        fv = closed_form_count(s, args.r, args.k)
        if fv is None:
            raise UsageError(f"no closed form for {s.key()} with r={args.r}, k={args.k}")
        rep = CountReport(s, args.r, args.k, fv.value, FORMULA, time.perf_counter() - t0)
    elif args.exact is not None:
        rep = count_exact_color(s, args.r, args.exact, args.k, method, **opts)
    else:
        rep = count_rainbow_free(s, args.r, args.k, method, **opts)
    if cache is not None:
        cache.store(key, rep.count, rep.method)
    _emit_count(rep, args.format, out)
    return EXIT_OK


def cmd_aw(args, out=sys.stdout) -> int:
    s = structure_from_args(args)
    if args.k < 3:
        raise UsageError("-k must be at least 3")
    res = compute_aw(s, args.k, budget=args.budget, workers=args.workers)
    if args.format == "json":
        print(_dumps(res.to_dict()), file=out)
    elif args.format == "csv":
        print("key,aw,nodes,elapsed_ms", file=out)
        print(f"{s.key()};k={args.k},{res.value},{res.nodes},{res.elapsed * 1000:.3f}", file=out)
    else:
        print(f"aw({s.key()}, {args.k}) = {res.value}", file=out)
        if res.witness:
            print("witness: " + " ".join(f"{x}:{c}" for x, c in sorted(res.witness.items())),
                  file=out)
    return EXIT_OK


def cmd_orbits(args, out=sys.stdout) -> int:
    dec = orbit_decompose(args.p)
    if args.format == "json":
        print(_dumps(dec.to_dict()), file=out)
    elif args.format == "csv":
        print("representative,size,elements", file=out)
        for rep, orb in zip(dec.representatives, dec.orbits):
            print(f"{rep},{len(orb)},{' '.join(map(str, orb))}", file=out)
    else:
        print(f"p={dec.p} ord={dec.ord} c={dec.c} m={dec.m}", file=out)
        for rep, orb in zip(dec.representatives, dec.orbits):
            print(f"  Q_{rep} ({len(orb)}): {' '.join(map(str, orb))}", file=out)
    return EXIT_OK


def _campaign_kwargs(name: str, args) -> dict:
    kw = {"workers": args.workers, "budget": args.budget}
    if name in ("thm5", "lemma8", "orbits") and args.max_p:
        kw["max_p"] = args.max_p
    if name in ("eq1", "lemma7", "thm4", "bounds") and args.max_n:
        kw["max_n"] = args.max_n
    if name == "thm5" and args.r:
        kw["rs"] = tuple(args.r)
    if name in ("eq1", "cor6", "thm4", "bounds") and args.r:
        kw["r"] = args.r[0]
    if name == "cor6" and args.pairs:
        kw["pairs"] = tuple(args.pairs)
    if name in ("props", "thm4"):
        kw["seed"] = args.seed
    if name == "props" and args.instances:
        kw["instances"] = args.instances
    return kw


def cmd_verify(args, out=sys.stdout) -> int:
    names = [n for n in CAMPAIGNS if args.all or getattr(args, n)]
    if not names:
        raise UsageError("select at least one campaign (or --all)")
    results = [CAMPAIGNS[n](**_campaign_kwargs(n, args)) for n in names]
    ok = all(c.passed for c in results)
    if args.format == "json":
        print(_dumps({"passed": ok, "campaigns": [c.to_dict() for c in results]}), file=out)
    else:
        for c in results:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status} {c.name}: {len(c.rows)} checks, {c.elapsed:.2f} s", file=out)
            for row in c.failures:
                print(f"    counterexample: {_dumps(row)}", file=out)
    return EXIT_OK if ok else EXIT_VERIFY


BENCH_CASES = (
    ("cyclic", 17, 3, SYMMETRY),
    ("cyclic", 17, 3, EXHAUSTIVE),
    ("interval", 14, 3, SYMMETRY),
    ("cyclic", 20, 3, SYMMETRY),
    ("cyclic", 11, 4, SYMMETRY),
)


def cmd_bench(args, out=sys.stdout) -> int:
    rows = []
    for kind, n, r, method in BENCH_CASES:
        s = Structure.cyclic(n) if kind == "cyclic" else Structure.interval(n)
        rep = count_rainbow_free(s, r, 3, method, workers=args.workers)
        rows.append(rep.to_dict())
    if args.format == "json":
        print(_dumps({"bench": rows}), file=out)
    else:
        for d in rows:
            print(f"{d['structure']:>12} r={d['r']} {d['method']:>15}: {d['count']:>10} "
                  f"{d['nodes']:>10} nodes {d['elapsed_ms']:>10.1f} ms", file=out)
    return EXIT_OK


COMMANDS = {"count": cmd_count, "aw": cmd_aw, "orbits": cmd_orbits,
            "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except CacheIntegrityError as e:
        print(f"cache integrity error: {e}", file=sys.stderr)
        return EXIT_CACHE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
