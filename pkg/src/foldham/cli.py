"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TextIO

from . import constructions, discrepancy, weights
from .net import DigitalNet, generate_points

SEPARATORS = {"csv": ",", "tsv": "\t", "plain": " "}


class UsageError(Exception):
    pass


def _validate(args) -> None:
    if getattr(args, "base", 2) < 2:
        raise UsageError(f"--base must be >= 2, got {args.base}")
    m = getattr(args, "m", None)
    if m is not None and m < 1:
        raise UsageError(f"--m must be >= 1, got {m}")
    if getattr(args, "construction", None) == "folded" and m is not None:
        depth = args.depth if args.depth is not None else 2 * m
        if depth < 2 * m:
            raise UsageError(f"--depth must be >= 2m for folded nets, got {depth} with m={m}")


def _depth(args) -> int:
    if args.construction == "hammersley":
        return args.m
    return args.depth if args.depth is not None else 2 * args.m


def _net(args) -> DigitalNet:
    return constructions.build(args.construction, args.base, args.m, _depth(args))


def _fmt_float(x: float) -> str:
    return repr(float(x))


def _parse_m_range(text: str) -> range:
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise UsageError(f"--m-range must look like LO..HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"invalid --m-range {text!r}")
    return range(lo, hi + 1)


def read_points(stream: TextIO) -> list[tuple[Fraction, Fraction]]:
    """Parse ``p/q,p/q`` lines; comments, headers and extra columns are skipped."""
    pts = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.replace(",", " ").replace("\t", " ").split()
        try:
            x, y = Fraction(fields[0]), Fraction(fields[1])
        except (ValueError, IndexError, ZeroDivisionError):
            if pts:
                raise UsageError(f"line {lineno}: cannot parse point {line!r}") from None
            continue  # header row
        pts.append((x, y))
    if not pts:
        raise UsageError("no points found in input")
    return pts


def cmd_gen(args, out: TextIO) -> int:
    net = _net(args)
    sep = SEPARATORS[args.format]
    n = net.scale
    den = args.base**n
    out.write(f"# construction={args.construction} base={args.base} m={args.m} n={n}\n")
    out.write(sep.join(["x1", "x2", "x1_decimal", "x2_decimal"]) + "\n")
    for p in net:
        out.write(sep.join([f"{p.num1}/{den}", f"{p.num2}/{den}", _fmt_float(p.num1 / den), _fmt_float(p.num2 / den)]) + "\n")
    return 0


def cmd_weights(args, out: TextIO) -> int:
    net = _net(args)
    G = net.matrices
    b, m, n = G.base, G.m, G.n
    out.write(f"construction={args.construction} base={b} m={m} n={n}\n")
    s1 = weights.structural_rho1_bound(G)
    out.write(f"structural_rho1_bound: {s1}\n")
    s2 = weights.structural_rho2_bound(G) if n >= 2 * m else None
    out.write(f"structural_rho2_bound: {'n/a (needs n >= 2m)' if s2 is None else s2}\n")
    r1 = weights.min_weight(G, "nrt", n)
    r2 = weights.min_weight(G, "dick", n)
    out.write(f"min_nrt_weight: {r1}\n")
    out.write(f"min_dick_weight: {r2}\n")
    if args.construction != "folded":
        out.write("thresholds: not claimed for this construction\n")
        return 0
    ok1 = r1.certifies_above(m - 1)
    ok2 = r2.certifies_above(2 * m - 3)
    out.write(f"nrt_min > m-1 = {m - 1}: {'PASS' if ok1 else 'FAIL'}\n")
    out.write(f"dick_min > 2m-3 = {2 * m - 3}: {'PASS' if ok2 else 'FAIL'}\n")
    return 0 if ok1 and ok2 else 1


def _disc_one(job):
    metric, pts, p, samples, mode, seed = job
    if metric == "l2":
        return discrepancy.l2_report(pts).render()
    if metric == "linf":
        return discrepancy.linf_report(pts).render()
    return discrepancy.lp_estimate(pts, p, samples, mode, seed).render()


def cmd_disc(args, out: TextIO) -> int:
    metrics = [s.strip() for s in args.metric.split(",") if s.strip()]
    for metric in metrics:
        if metric not in ("l2", "linf", "lp"):
            raise UsageError(f"unknown metric {metric!r}")
    if "lp" in metrics:
        if args.p is None or not args.p >= 1 or math.isinf(args.p):
            raise UsageError("--p must be a finite number >= 1 (use --metric linf for p = inf)")
        if args.samples < 1:
            raise UsageError("--samples must be >= 1")
        if args.mode == "random" and args.seed is None:
            raise UsageError("--mode random needs --seed")
    if args.input:
        with open(args.input, encoding="utf-8") as f:
            pts = read_points(f)
        out.write(f"input={args.input} N={len(pts)}\n")
    else:
        if args.m is None:
            raise UsageError("give either --input or --m")
        pts = _net(args)
        out.write(f"construction={args.construction} base={args.base} m={args.m} n={pts.scale} N={len(pts)}\n")
    jobs = [(mt, pts, args.p, args.samples, args.mode, args.seed) for mt in metrics]
    for line in _map(_disc_one, jobs, args.jobs):
        out.write(line + "\n")
    return 0


def _verify_one(job) -> list[tuple[bool, str]]:
    b, m = job
    n = 2 * m
    tag = f"b={b} m={m} n={n}"
    res = []
    rep = weights.verify_lemma_linear(b, m, n)
    for it in rep.items:
        detail = f"instances={it.instances}" + ("" if it.passed else f" failing={it.failure}")
        res.append((it.passed, f"lemma_linear.item{it.item} {tag} {detail}"))

    fp = constructions.folded_points(b, m, n)
    G = fp.matrices
    triple = fp.points == constructions.folded_by_baker(b, m, n).points == generate_points(G).points
    res.append((triple, f"construction_triple_equality {tag}"))
    res.append((len(set(fp.points)) == len(fp), f"folded_points_distinct {tag}"))

    r1 = weights.min_weight(G, "nrt", n)
    r2 = weights.min_weight(G, "dick", n)
    res.append((r1.certifies_above(m - 1), f"nrt_min_gt_m-1 {tag} min={r1}"))
    res.append((r2.certifies_above(2 * m - 3), f"dick_min_gt_2m-3 {tag} min={r2}"))
    s1 = weights.structural_rho1_bound(G)
    s2 = weights.structural_rho2_bound(G)
    res.append((s1 >= m - 1 and r1.certifies_above(s1), f"structural_rho1 {tag} bound={s1}"))
    res.append((s2 >= 2 * m - 3 and r2.certifies_above(s2), f"structural_rho2 {tag} bound={s2}"))
    return res


def cmd_verify(args, out: TextIO) -> int:
    if args.m_max < 1:
        raise UsageError("--m-max must be >= 1")
    failures = 0
    for results in _map(_verify_one, [(args.base, m) for m in range(1, args.m_max + 1)], args.jobs):
        for ok, line in results:
            failures += not ok
            out.write(f"{'PASS' if ok else 'FAIL'} {line}\n")
    out.write("ALL PASS\n" if not failures else f"FAILED {failures} check(s)\n")
    return 0 if not failures else 1


def _scan_one(job) -> list[list[str]]:
    b, m = job
    N = b**m
    rows = []
    for name in ("hammersley", "folded"):
        net = constructions.build(name, b, m)
        l2 = math.sqrt(discrepancy.l2_exact(net))
        linf = float(discrepancy.linf_exact(net))
        rows.append([str(m), str(N), name, _fmt_float(l2), _fmt_float(l2 * N / math.sqrt(m)),
                     _fmt_float(linf), _fmt_float(linf * N / m)])
    return rows


def cmd_scan(args, out: TextIO) -> int:
    ms = _parse_m_range(args.m_range)
    sep = SEPARATORS[args.format]
    out.write(sep.join(["m", "N", "construction", "L2", "L2_ratio", "Linf", "Linf_ratio"]) + "\n")
    for rows in _map(_scan_one, [(args.base, m) for m in ms], args.jobs):
        for row in rows:
            out.write(sep.join(row) + "\n")
    return 0


def _map(fn: Callable, jobs: Sequence, workers: int) -> Iterable:
    if workers <= 1 or len(jobs) <= 1:
        return map(fn, jobs)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, jobs))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foldham", description="Hammersley and folded Hammersley digital nets: construction, weights and discrepancy.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", type=int, default=2)
    common.add_argument("--format", choices=sorted(SEPARATORS), default="csv")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes; output does not depend on it")

    net = argparse.ArgumentParser(add_help=False)
    net.add_argument("--m", type=int)
    net.add_argument("--depth", type=int, help="folding depth n (default 2m)")
    net.add_argument("--construction", choices=["hammersley", "folded"], default="folded")

    p = sub.add_parser("gen", parents=[common, net], help="list the points of a net")
    p.set_defaults(func=cmd_gen, needs_m=True)

    p = sub.add_parser("weights", parents=[common, net], help="minimum NRT/Dick weights and structural bounds")
    p.set_defaults(func=cmd_weights, needs_m=True)

    p = sub.add_parser("disc", parents=[common, net], help="discrepancy of a net or a point file")
    p.add_argument("--input", help="point file with lines 'p/q,p/q'")
    p.add_argument("--metric", default="l2,linf", help="comma list of l2, linf, lp")
    p.add_argument("--p", type=float)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--mode", choices=["grid", "random"], default="grid")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_disc, needs_m=False)

    p = sub.add_parser("verify", parents=[common], help="run the lemma checks for m = 1..m-max")
    p.add_argument("--m-max", type=int, default=5)
    p.set_defaults(func=cmd_verify, needs_m=False)

    p = sub.add_parser("scan", parents=[common], help="discrepancy scaling table as CSV")
    p.add_argument("--m-range", default="2..10")
    p.set_defaults(func=cmd_scan, needs_m=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.needs_m and args.m is None:
            raise UsageError("--m is required")
        _validate(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as f:
                return args.func(args, f)
        return args.func(args, sys.stdout)
    except (UsageError, ValueError) as e:
        print(f"foldham: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
