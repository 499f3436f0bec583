"""Command-line entry point: ``dexter <command> ...``.

Paths are given as 0/1 strings.  Every command is deterministic for a fixed
``--seed``; ``verify`` exits nonzero iff some check fails.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from typing import Sequence, TextIO

from . import dyck, hochschild, intervals, invariants, meet, monoids, order, related
from .config import FORMATS, PRESETS, RunConfig
from .errors import DexterError, SizeTooLarge
from .verify import SUITES, run_suite


def _emit_poset(P, fmt: str, out: TextIO) -> None:
    if fmt == "dot":
        out.write(P.to_dot(label=dyck.to_string) + "\n")
    elif fmt == "json":
        out.write(P.to_json(label=dyck.to_string) + "\n")
    else:
        for i, j, c in P.covers:
            out.write(f"{dyck.to_string(P.elements[i])} -> {dyck.to_string(P.elements[j])} {c}\n")


def cmd_hasse(args, cfg: RunConfig, out: TextIO) -> int:
    if args.order == "dexter":
        P = order.hasse(args.n, max_n=cfg.cap("hasse"))
    else:
        order.hasse(args.n, max_n=cfg.cap("hasse"))  # same size guard
        P = related.order_poset(args.n, args.order)
    _emit_poset(P, args.format or "dot", out)
    return 0


def cmd_verify(args, cfg: RunConfig, out: TextIO) -> int:
    rep = run_suite(args.suite, cfg)
    if cfg.format == "json":
        json.dump(rep.records(), out, indent=1, default=str)
        out.write("\n")
    else:
        for c in rep.checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}\n")
        out.write(f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks passed\n")
    return 0 if rep.passed else 1


def cmd_meet(args, cfg: RunConfig, out: TextIO) -> int:
    v, w = dyck.parse(args.path1), dyck.parse(args.path2)
    trace: list = []
    m = meet.meet(v, w, trace)
    if cfg.format == "json":
        json.dump({"meet": dyck.to_string(m),
                   "trace": [{"step": d + 1, "kept": dyck.to_string(a), "lowered": dyck.to_string(b)}
                             for d, a, b in trace]}, out, indent=1)
        out.write("\n")
        return 0
    for d, a, b in trace:
        out.write(f"step {d + 1}: {dyck.to_string(a)} / {dyck.to_string(b)}\n")
    out.write(dyck.to_string(m) + "\n")
    return 0


def cmd_hochschild(args, cfg: RunConfig, out: TextIO) -> int:
    if args.action == "rho":
        if not args.path:
            raise DexterError("rho needs --path")
        out.write(hochschild.to_digits(hochschild.rho(dyck.parse(args.path))) + "\n")
        return 0
    if args.action == "rho-inv":
        if not args.word:
            raise DexterError("rho-inv needs --word")
        out.write(dyck.to_string(hochschild.rho_inv(tuple(int(c) for c in args.word))) + "\n")
        return 0
    if args.n is None:
        raise DexterError(f"{args.action} needs --n")
    if args.n + 2 > order.DEFAULT_MAX_N:
        raise SizeTooLarge(f"F_{args.n} lives in size {args.n + 2} > {order.DEFAULT_MAX_N}")
    if args.action == "zsets":
        z0, z1, zb = hochschild.z_sets(args.n)
        data = {k: sorted(hochschild.to_digits(z) for z in zs) for k, zs in (("0", z0), ("1", z1), ("b", zb))}
        if cfg.format == "json":
            json.dump(data, out, indent=1)
            out.write("\n")
        else:
            for k, words in data.items():
                out.write(f"Z_{args.n},{k}: {' '.join(words)}\n")
        return 0
    # poset
    _emit_poset(hochschild.f_poset(args.n), cfg.format if cfg.format != "csv" else "text", out)
    return 0


def cmd_intervals(args, cfg: RunConfig, out: TextIO) -> int:
    if args.action == "count":
        if args.n > cfg.cap("hasse"):
            raise SizeTooLarge(f"n={args.n} exceeds the cap {cfg.cap('hasse')}")
        writer = csv.writer(out, lineterminator="\n")
        if args.by_blocks:
            writer.writerow(["n", "blocks", "intervals"])
            for n in range(args.n + 1):
                by = Counter()
                for I in intervals.iter_intervals(n, max_n=cfg.cap("hasse")):
                    by[len(dyck.blocks(I.bottom))] += 1
                for k in sorted(by):
                    writer.writerow([n, k, by[k]])
        else:
            writer.writerow(["n", "intervals", "formula"])
            for n in range(args.n + 1):
                writer.writerow([n, intervals.interval_count(n), intervals.interval_count_formula(n)])
        return 0
    if args.action == "series":
        f = intervals.series(args.kind, args.deg, max_n=cfg.cap("hasse"))
        if cfg.format == "json":
            json.dump({str(n): str(c) for n, c in enumerate(intervals.series_table(args.kind, args.deg))}, out,
                      indent=1)
            out.write("\n")
        else:
            out.write(str(f) + "\n")
        return 0
    if args.action == "poset":
        w = dyck.parse(args.path)
        I = intervals.J_of(w) if args.upper else intervals.I_of(w)
        _emit_poset(intervals.interval_poset(I), cfg.format if cfg.format != "csv" else "text", out)
        return 0
    raise DexterError(f"unknown action {args.action}")


def cmd_monoid(args, cfg: RunConfig, out: TextIO) -> int:
    if args.action == "factor":
        w = dyck.parse(args.path)
        factors = monoids.m1_factor(w)
        if args.top:
            I = dyck.IntervalRef(w, dyck.parse(args.top))
            factors2 = monoids.m2_factor(I)
            lines = [f"[{dyck.to_tuple_notation(J.bottom)}, {dyck.to_tuple_notation(J.top)}]" for J in factors2]
        else:
            lines = [dyck.to_tuple_notation(g) for g in factors]
        out.write((" # ".join(lines) or "(1,0)") + "\n")
        return 0
    if args.action == "generators":
        out.write(f"{monoids.m2_generator_count(args.n)}\n")
        return 0
    raise DexterError(f"unknown action {args.action}")


def _target_poset(args, cfg: RunConfig):
    if args.path:
        w = dyck.parse(args.path)
        return intervals.interval_poset(intervals.J_of(w) if args.upper else intervals.I_of(w))
    if args.hochschild is not None:
        return hochschild.f_poset(args.hochschild)
    if args.n is None:
        raise DexterError("give --n, --path or --hochschild")
    return order.hasse(args.n, max_n=cfg.cap("hasse"))


def cmd_invariants(args, cfg: RunConfig, out: TextIO) -> int:
    what = args.what
    if what == "hpoly":
        if args.n is None:
            raise DexterError("hpoly needs --n")
        out.write(str(invariants.colored_h_polynomial(args.n, swap=args.swap)) + "\n")
        return 0
    P = _target_poset(args, cfg)
    if what == "coxeter":
        p = invariants.coxeter_polynomial(P)
        f = invariants.cyclotomic_factor(p)
        result = {"size": len(P), "polynomial": str(p), "factorization": str(f),
                  "unit_circle": invariants.roots_on_unit_circle(p)}
    elif what == "zeta":
        Z = invariants.zeta_polynomial(P)
        result = {"size": len(P), "zeta": str(Z), "at_-1": Z(-1), "at_-2": Z(-2)}
    elif what == "chains":
        result = {"size": len(P), "longest_chain": invariants.longest_chain(P)}
    elif what == "lattice":
        lat = P.is_lattice()
        result = {"size": len(P), "lattice": lat}
        if lat:
            result["semidistributive"] = invariants.is_semidistributive(P)
            result["extremal"] = invariants.is_extremal(P)
    else:
        raise DexterError(f"unknown invariant {what}")
    if cfg.format == "json":
        json.dump(result, out, indent=1)
        out.write("\n")
    else:
        for k, v in result.items():
            out.write(f"{k}: {v}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dexter", description="Dexter order on Dyck paths.")
    p.add_argument("--caps", choices=sorted(PRESETS), default="small")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS)
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hasse", help="Hasse diagram of an order on paths of size n")
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--order", choices=("dexter", "tamari", "comb"), default="dexter")
    h.add_argument("--format", dest="sub_format", choices=("dot", "json", "text"))
    h.set_defaults(func=cmd_hasse)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--caps", dest="sub_caps", choices=sorted(PRESETS))
    v.add_argument("--format", dest="sub_format", choices=("text", "json"))
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("meet", help="constructive meet of two paths")
    m.add_argument("--path1", required=True)
    m.add_argument("--path2", required=True)
    m.add_argument("--format", dest="sub_format", choices=("text", "json"))
    m.set_defaults(func=cmd_meet)

    hs = sub.add_parser("hochschild", help="the interval F_n and its ternary encoding")
    hs.add_argument("action", choices=("rho", "rho-inv", "zsets", "poset"))
    hs.add_argument("--path")
    hs.add_argument("--word")
    hs.add_argument("--n", type=int)
    hs.add_argument("--format", dest="sub_format", choices=("text", "json", "dot"))
    hs.set_defaults(func=cmd_hochschild)

    it = sub.add_parser("intervals", help="interval enumeration and series")
    it.add_argument("action", choices=("count", "series", "poset"))
    it.add_argument("--n", type=int, default=6)
    it.add_argument("--by-blocks", action="store_true")
    it.add_argument("--kind", choices=("A", "R", "C"), default="A")
    it.add_argument("--deg", type=int, default=4)
    it.add_argument("--path")
    it.add_argument("--upper", action="store_true", help="use the interval below (1,w,1,0,0)")
    it.add_argument("--format", dest="sub_format", choices=FORMATS)
    it.set_defaults(func=cmd_intervals)

    mo = sub.add_parser("monoid", help="factorizations in the path and interval monoids")
    mo.add_argument("action", choices=("factor", "generators"))
    mo.add_argument("--path")
    mo.add_argument("--top", help="factor the interval [path, top] instead")
    mo.add_argument("--n", type=int, default=4)
    mo.set_defaults(func=cmd_monoid)

    inv = sub.add_parser("invariants", help="poset invariants")
    inv.add_argument("what", choices=("coxeter", "zeta", "hpoly", "chains", "lattice"))
    inv.add_argument("--n", type=int)
    inv.add_argument("--path", help="interval below this path")
    inv.add_argument("--upper", action="store_true", help="use the interval below (1,w,1,0,0)")
    inv.add_argument("--hochschild", type=int, metavar="N", help="the interval F_N")
    inv.add_argument("--swap", action="store_true", help="swap edge colors (hpoly)")
    inv.add_argument("--format", dest="sub_format", choices=("text", "json"))
    inv.set_defaults(func=cmd_invariants)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = getattr(args, "sub_caps", None) or args.caps
    fmt = getattr(args, "sub_format", None) or args.format
    try:
        cfg = RunConfig.preset(caps, threads=args.threads, format=fmt or "text", seed=args.seed)
        args.format = fmt
        return args.func(args, cfg, out)
    except DexterError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
