"""Command line interface.

Exit codes: 0 success, 1 a checked property failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import height as H
from .bratteli import build_rollet, dimension_audit
from .diagram import Diagram, compose
from .exact import format_poly, rank_at, rational_and_quadratic_roots
from .symgrp import parse_partition


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    l: int | None = None
    n: int | None = None
    m: int | None = None
    p: int | None = None
    lam: tuple = ()
    deltas: list = field(default_factory=list)
    budget: int | None = None
    samples: int | None = None
    seed: int = 0
    fmt: str = "json"
    cache: str | None = None
    jobs: int = 1


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number") from None


def _partition(text: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _diagram(text: str) -> Diagram:
    try:
        return Diagram.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad diagram {text!r}: {exc}") from None


def _require(cfg, *names):
    missing = [x for x in names if getattr(cfg, x) is None]
    if missing:
        raise UsageError(f"{cfg.command} needs " + ", ".join("--" + x for x in missing))


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


# ---------------------------------------------------------------- commands

def _height_worker(p):
    return H.partition_height(p)


def cmd_enumerate(cfg: RunConfig, args, out) -> int:
    _require(cfg, "n", "m")
    if (cfg.n + cfg.m) % 2 or cfg.n + cfg.m > H.MAX_POINTS:
        raise UsageError(f"need n + m even and at most {H.MAX_POINTS}")
    if cfg.jobs > 1 and not H._cache_path(cfg.n, cfg.m):
        from concurrent.futures import ProcessPoolExecutor
        from .diagram import pair_partitions
        ps = pair_partitions(cfg.n, cfg.m)
        H._certified((cfg.n + cfg.m) // 2)
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_height_worker, ps, chunksize=32))
        table = H.HeightTable(cfg.n, cfg.m, dict(zip(ps, results)))
    else:
        table = H.enumerate_by_height(cfg.n, cfg.m)
    if args.out:
        with open(args.out, "w") as fh:
            for p, r in table.results.items():
                fh.write(json.dumps(r.to_record(p)) + "\n")
    elif args.records:
        for p, r in table.results.items():
            _emit(r.to_record(p), out)
    _emit({"n": cfg.n, "m": cfg.m, "total": len(table.results),
           "histogram": {str(k): v for k, v in table.census().items()},
           "all_exact": all(r.exact for r in table.results.values())}, out)
    return 0


def cmd_height(cfg: RunConfig, args, out) -> int:
    p = args.diagram
    if not p.is_pair:
        raise UsageError("height needs a pair partition")
    r = H.partition_height(p, cfg.budget)
    _emit(r.to_record(p), out)
    return 0


def cmd_compose(cfg: RunConfig, args, out) -> int:
    try:
        r = compose(args.left, args.right)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(json.loads(r.to_json()), out)
    return 0


def cmd_gram(cfg: RunConfig, args, out) -> int:
    from .reptheory import check_label, gram_matrix
    _require(cfg, "l", "n", "p")
    try:
        check_label(cfg.l, cfg.n, cfg.p, cfg.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = gram_matrix(cfg.l, cfg.n, cfg.p, cfg.lam)
    report = {"l": cfg.l, "n": cfg.n, "p": cfg.p, "lambda": list(cfg.lam),
              "matrix": [[format_poly(x) for x in row] for row in g.matrix.row_lists()],
              "rank_at": {str(d): rank_at(g.matrix, d) for d in cfg.deltas}}
    if args.det:
        det = g.det()
        report["det"] = format_poly(det)
        roots = []
        if not det.is_zero():
            for f, k in rational_and_quadratic_roots(det):
                roots += f.roots_text() * k
        report["roots"] = roots
    if cfg.fmt == "csv":
        out.write(g.to_csv())
        for key in ("det", "roots", "rank_at"):
            if key in report:
                out.write(f"# {key}: {json.dumps(report[key])}\n")
    else:
        _emit(report, out)
    return 0


def cmd_dims(cfg: RunConfig, args, out) -> int:
    from .reptheory import semisimplicity_report
    _require(cfg, "l", "n")
    rep = semisimplicity_report(cfg.l, cfg.n, cfg.deltas)
    audit = dimension_audit(cfg.l, cfg.n)
    obj = json.loads(rep.to_json())
    obj["walk_audit"] = {"ok": audit.ok, "closed_walks": audit.closed_walks,
                         "basis_size": audit.basis_size,
                         "labels": [{"p": x.label[0], "lambda": list(x.label[1]),
                                     "walks": x.walks, "dim": x.dimension} for x in audit.lines]}
    _emit(obj, out)
    return 0 if rep.ok and audit.ok else 1


def cmd_rollet(cfg: RunConfig, args, out) -> int:
    _require(cfg, "l")
    g = build_rollet(cfg.l, args.radius)
    out.write(g.to_dot() + "\n" if cfg.fmt == "dot" else g.to_json() + "\n")
    return 0


def _suite(cfg: RunConfig, suite: str) -> dict:
    from .reptheory import (globalization_check, ideal_check, index_set, index_set_recursive,
                            restriction_check)
    l, n = cfg.l, cfg.n
    if suite == "closure":
        rep = H.check_closure(l, n, cfg.samples, cfg.seed)
        return {"ok": rep.ok, "checked": rep.checked,
                "violations": [[str(x) for x in v[:3]] + list(v[3:]) for v in rep.violations[:10]]}
    if suite == "dims":
        audit = dimension_audit(l, n)
        return {"ok": audit.ok and index_set(l, n) == index_set_recursive(l, n),
                "closed_walks": audit.closed_walks, "basis_size": audit.basis_size,
                "mismatches": [[x.label[0], list(x.label[1]), x.walks, x.dimension]
                               for x in audit.lines if not x.ok]}
    if suite == "ideal":
        reps = [ideal_check(l, n, t) for t in range(1, n // 2 + 1)]
        return {"ok": all(r.ok for r in reps), "ranks": {r.t: list(r.ranks) for r in reps}}
    if suite == "restriction":
        reps = [restriction_check(l, n, *lab) for lab in index_set(l, n)]
        return {"ok": all(r.ok for r in reps),
                "failures": [[r.label[0], list(r.label[1]), r.regime] for r in reps if not r.ok]}
    if suite == "globalization":
        reps = [globalization_check(l, n, *lab) for lab in index_set(l, n + 2)]
        return {"ok": all(r.ok for r in reps),
                "failures": [[r.label[0], list(r.label[1]), r.image_dim, r.expected]
                             for r in reps if not r.ok]}
    if suite == "blob":
        # the blob count is a height-0 statement, whatever --l says
        rep = H.count_left_simple(n, 0, cfg.budget)
        want = comb(2 * (n - 1), n - 1)
        return {"l": 0, "ok": rep.count == want and not rep.disagreements, "count": rep.count,
                "expected": want, "pictures_examined": rep.examined,
                "disagreements": [[str(p), w] for p, w in rep.disagreements]}
    raise UsageError(f"unknown suite {suite}")


SUITES = ("closure", "dims", "ideal", "restriction", "globalization", "blob")
NEEDS = {"closure": ("n",), "dims": ("l", "n"), "ideal": ("l", "n"), "restriction": ("l", "n"),
         "globalization": ("l", "n"), "blob": ("n",)}


def cmd_check(cfg: RunConfig, args, out) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = {"seed": cfg.seed, "samples": cfg.samples, "l": cfg.l, "n": cfg.n, "suites": {}}
    for s in suites:
        _require(cfg, *NEEDS[s])
        report["suites"][s] = _suite(cfg, s)
    ok = all(v["ok"] for v in report["suites"].values())
    report["ok"] = ok
    _emit(report, out)
    return 0 if ok else 1


COMMANDS = {"enumerate": cmd_enumerate, "height": cmd_height, "compose": cmd_compose,
            "gram": cmd_gram, "dims": cmd_dims, "rollet": cmd_rollet, "check": cmd_check}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="brauerheight",
                                 description="Exact computations in height-bounded Brauer categories.")
    ap.add_argument("--cache", help=f"height table cache directory (default ${H.CACHE_ENV})")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, *names):
        if "l" in names:
            p.add_argument("--l", type=int, help="height bound (-1 = Temperley-Lieb)")
        if "n" in names:
            p.add_argument("--n", type=int)
        if "m" in names:
            p.add_argument("--m", type=int)
        if "p" in names:
            p.add_argument("--p", type=int, help="propagating number")
        if "lambda" in names:
            p.add_argument("--lambda", dest="lam", type=_partition, default=(),
                           help="integer partition, e.g. 2,1")
        if "delta" in names:
            p.add_argument("--delta", dest="deltas", type=_rational, action="append", default=[],
                           help="exact rational delta value (repeatable)")

    p = sub.add_parser("enumerate", help="height table of J(n,m)")
    common(p, "n", "m")
    p.add_argument("--out", help="write the JSON-lines table here")
    p.add_argument("--records", action="store_true", help="print every record before the summary")

    p = sub.add_parser("height", help="left-height of one pair partition")
    p.add_argument("diagram", type=_diagram, help='JSON, e.g. {"n":2,"m":2,"blocks":[[1,-2],[2,-1]]}')
    p.add_argument("--budget", type=int, help="also search all slice words with this many events")

    p = sub.add_parser("compose", help="compose two diagrams (left on top)")
    p.add_argument("left", type=_diagram)
    p.add_argument("right", type=_diagram)

    p = sub.add_parser("gram", help="Gram matrix of a standard module")
    common(p, "l", "n", "p", "lambda", "delta")
    p.add_argument("--det", action="store_true", help="also report the determinant and its roots")
    p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")

    p = sub.add_parser("dims", help="semisimplicity report and walk-count audit")
    common(p, "l", "n", "delta")

    p = sub.add_parser("rollet", help="export the Rollet graph")
    common(p, "l")
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--format", dest="fmt", choices=("dot", "json"), default="dot")

    p = sub.add_parser("check", help="run property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    common(p, "l", "n")
    p.add_argument("--samples", type=int, help="random pairs for closure (default exhaustive)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, help="word-search budget for the blob suite")
    return ap


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(args.command)
    for name in ("l", "n", "m", "p", "lam", "deltas", "budget", "samples", "seed", "fmt",
                 "cache", "jobs"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    return cfg


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(args)
    if cfg.cache:
        os.environ[H.CACHE_ENV] = cfg.cache
    try:
        return COMMANDS[cfg.command](cfg, args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
