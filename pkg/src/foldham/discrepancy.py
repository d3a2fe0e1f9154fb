"""Exact and estimated discrepancy of finite point sets in [0, 1)^2.

Exact routines work on integer numerators over a common denominator, so no
box count ever depends on float rounding (net points sit exactly on b-adic
grid lines, where float comparisons are most fragile).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

import numpy as np

from .net import DigitalNet

PointLike = Sequence[Union[Fraction, int, str]]
Points = Union[DigitalNet, Iterable[PointLike]]


@dataclass(frozen=True)
class DiscrepancyReport:
    metric: str
    N: int
    exact: Fraction | None = None  # L2 reports carry the square of the norm
    estimate: float | None = None
    error_bound: float | None = None
    params: dict = field(default_factory=dict)

    @property
    def value(self) -> float:
        """The norm as a float (the square root is taken for L2)."""
        if self.exact is None:
            return self.estimate
        if self.metric == "l2":
            return math.sqrt(self.exact)
        return float(self.exact)

    def render(self) -> str:
        if self.exact is not None:
            q = self.exact
            if self.metric == "l2":
                return f"L2^2 = {q.numerator}/{q.denominator} (≈ {float(q)!r}), L2 ≈ {self.value!r}"
            return f"Linf = {q.numerator}/{q.denominator} (≈ {float(q)!r})"
        p = self.params
        src = f"seed {p['seed']}" if p.get("mode") == "random" else "midpoint grid"
        return f"L{p['p']:g} ≈ {self.estimate!r} ± {self.error_bound!r} ({p['samples']} samples, {src})"


def integer_points(P: Points) -> tuple[list[int], list[int], int]:
    """Return ``(X1, X2, D)`` with point ``i`` equal to ``(X1[i]/D, X2[i]/D)``."""
    if isinstance(P, DigitalNet):
        D = P.points[0].denominator
        nums = P.numerators()
        return [a for a, _ in nums], [c for _, c in nums], D
    pts = [(Fraction(x), Fraction(y)) for x, y in P]
    if not pts:
        raise ValueError("empty point set")
    for x, y in pts:
        if not (0 <= x < 1 and 0 <= y < 1):
            raise ValueError(f"point ({x}, {y}) is outside [0,1)^2")
    D = reduce(math.lcm, (c.denominator for pt in pts for c in pt), 1)
    return [int(x * D) for x, _ in pts], [int(y * D) for _, y in pts], D


def local_discrepancy(P: Points, y: tuple) -> Fraction:
    """Fraction of points in ``[0, y1) x [0, y2)`` minus the box area."""
    y1, y2 = Fraction(y[0]), Fraction(y[1])
    if not (0 <= y1 < 1 and 0 <= y2 < 1):
        raise ValueError("y must lie in [0,1)^2")
    X1, X2, D = integer_points(P)
    if not X1:
        raise ValueError("empty point set")
    count = sum(1 for a, c in zip(X1, X2) if Fraction(a, D) < y1 and Fraction(c, D) < y2)
    return Fraction(count, len(X1)) - y1 * y2


class _Fenwick:
    def __init__(self, size: int):
        self.cnt = [0] * (size + 1)
        self.tot = [0] * (size + 1)

    def add(self, i: int, value: int) -> None:
        i += 1
        while i < len(self.cnt):
            self.cnt[i] += 1
            self.tot[i] += value
            i += i & -i

    def prefix(self, i: int) -> tuple[int, int]:
        """Count and sum of entries with rank < i."""
        c = s = 0
        while i > 0:
            c += self.cnt[i]
            s += self.tot[i]
            i -= i & -i
        return c, s


def _sum_min_products(U1: list[int], U2: list[int]) -> int:
    """Exact ``sum_{i,j} min(U1_i, U1_j) * min(U2_i, U2_j)`` in O(N log N)."""
    order = sorted(range(len(U1)), key=lambda i: U1[i])
    ranks = {v: r for r, v in enumerate(sorted(set(U2)))}
    tree = _Fenwick(len(ranks))
    total_seen = 0
    diag = 0
    cross = 0
    # Walk from the largest U1 down: every point already in the tree has
    # U1 >= the current one, so the pair's U1-minimum is the current U1.
    for idx in reversed(order):
        u1, u2 = U1[idx], U2[idx]
        diag += u1 * u2
        r = ranks[u2]
        below_cnt, below_sum = tree.prefix(r)
        cross += u1 * (below_sum + u2 * (total_seen - below_cnt))
        tree.add(r, u2)
        total_seen += 1
    return diag + 2 * cross


def l2_exact(P: Points) -> Fraction:
    """Squared L2 discrepancy, exactly, via Warnock's pairwise formula.

    ``1/9 - (2/N) sum_x prod_j (1 - x_j^2)/2 + (1/N^2) sum_{x,x'} prod_j (1 - max(x_j, x'_j))``
    """
    X1, X2, D = integer_points(P)
    N = len(X1)
    if N == 0:
        raise ValueError("empty point set")
    D2 = D * D
    single = sum((D2 - a * a) * (D2 - c * c) for a, c in zip(X1, X2))
    pair = _sum_min_products([D - a for a in X1], [D - c for c in X2])
    return Fraction(1, 9) - Fraction(single, 2 * N * D2 * D2) + Fraction(pair, N * N * D2)


def _int_array(values: Sequence[int], bound: int) -> np.ndarray:
    # int64 when every intermediate provably fits, Python ints otherwise.
    if bound < 2**62:
        return np.asarray(values, dtype=np.int64)
    return np.asarray(values, dtype=object)


def linf_exact(P: Points) -> Fraction:
    """Star discrepancy (sup of |local discrepancy|), exactly.

    The supremum is taken over the grid of distinct point coordinates plus
    0 and 1 in each axis. At each node both one-sided limits are evaluated:
    closed count minus area (approached from above) and area minus open count.
    The sweep over the first axis keeps a histogram over the second, so the
    cost is O(N^2) vectorised work.
    """
    X1, X2, D = integer_points(P)
    N = len(X1)
    if N == 0:
        raise ValueError("empty point set")
    g1 = sorted(set(X1) | {0, D})
    g2 = sorted(set(X2) | {0, D})
    pos2 = {v: i for i, v in enumerate(g2)}
    by_x1: dict[int, list[int]] = {}
    for a, c in zip(X1, X2):
        by_x1.setdefault(a, []).append(pos2[c])

    # Compare in units of 1/(N D^2): count*D^2 against N*g1*g2.
    bound = N * D * D * 4
    G2 = _int_array(g2, bound)
    hist = np.zeros(len(g2), dtype=np.int64)
    best_num = 0  # numerator over N * D^2
    D2 = D * D
    for a in g1:
        closed_before = np.cumsum(hist)
        open_cnt = closed_before - hist
        for r in by_x1.get(a, ()):
            hist[r] += 1
        closed_cnt = np.cumsum(hist)
        area = G2 * (N * a)
        over = _int_array(closed_cnt.tolist(), bound) * D2 - area
        under = area - _int_array(open_cnt.tolist(), bound) * D2
        best_num = max(best_num, int(over.max()), int(under.max()))
    return Fraction(best_num, N * D2)


def _midpoint_first_index(X: Sequence[int], D: int, g: int) -> np.ndarray:
    # Smallest i with midpoint (2i+1)/(2g) > X/D, clipped to [0, g].
    idx = [min(max((2 * g * x - D) // (2 * D) + 1, 0), g) for x in X]
    return np.asarray(idx, dtype=np.int64)


def _local_on_grid(X1: Sequence[int], X2: Sequence[int], D: int, g: int) -> np.ndarray:
    """Local discrepancy on the ``g x g`` midpoint grid, counts exact."""
    N = len(X1)
    i1 = _midpoint_first_index(X1, D, g)
    i2 = _midpoint_first_index(X2, D, g)
    H = np.zeros((g + 1, g + 1), dtype=np.int64)
    np.add.at(H, (i1, i2), 1)
    counts = H.cumsum(axis=0).cumsum(axis=1)[:g, :g]
    y = (2 * np.arange(g) + 1) / (2 * g)
    return counts / N - np.outer(y, y)


def _local_at_samples(X1, X2, D, Y: np.ndarray, chunk: int = 4096) -> np.ndarray:
    x1 = np.asarray(X1, dtype=float) / D
    x2 = np.asarray(X2, dtype=float) / D
    out = np.empty(len(Y))
    for s in range(0, len(Y), chunk):
        y = Y[s : s + chunk]
        inside = (x1[None, :] < y[:, :1]) & (x2[None, :] < y[:, 1:2])
        out[s : s + chunk] = inside.sum(axis=1) / len(x1) - y[:, 0] * y[:, 1]
    return out


def local_samples(P: Points, samples: int, mode: str = "grid", seed: int | None = None) -> tuple[np.ndarray, dict]:
    """Local discrepancy evaluated at the sample nodes used by ``lp_estimate``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    X1, X2, D = integer_points(P)
    if mode == "grid":
        g = math.isqrt(samples)
        vals = _local_on_grid(X1, X2, D, g).ravel()
        return vals, {"mode": "grid", "samples": g * g}
    if mode == "random":
        if seed is None:
            raise ValueError("random mode needs an explicit seed")
        Y = np.random.default_rng(seed).random((samples, 2))
        return _local_at_samples(X1, X2, D, Y), {"mode": "random", "samples": samples, "seed": seed}
    raise ValueError(f"unknown mode {mode!r}")


def lp_from_local(vals: np.ndarray, p: float) -> tuple[float, float]:
    """``(estimate, standard error)`` of the Lp norm from local discrepancy samples."""
    if not p >= 1 or math.isinf(p):
        raise ValueError("p must be a finite real >= 1; use linf_exact for p = inf")
    a = np.abs(vals) ** p
    mean = float(a.mean())
    se_mean = float(a.std(ddof=1) / math.sqrt(len(a))) if len(a) > 1 else float("inf")
    est = mean ** (1 / p)
    # delta method through t -> t^(1/p)
    se = se_mean * (mean ** (1 / p - 1)) / p if mean > 0 else se_mean ** (1 / p)
    return est, se


def lp_estimate(P: Points, p: float, samples: int = 100_000, mode: str = "grid", seed: int | None = None) -> DiscrepancyReport:
    if not p >= 1 or math.isinf(p):
        raise ValueError("p must be a finite real >= 1; use linf_exact for p = inf")
    vals, params = local_samples(P, samples, mode, seed)
    est, se = lp_from_local(vals, p)
    params["p"] = p
    return DiscrepancyReport("lp", len(integer_points(P)[0]), estimate=est, error_bound=se, params=params)


def l2_report(P: Points) -> DiscrepancyReport:
    X1, _, _ = integer_points(P)
    return DiscrepancyReport("l2", len(X1), exact=l2_exact(P))


def linf_report(P: Points) -> DiscrepancyReport:
    X1, _, _ = integer_points(P)
    return DiscrepancyReport("linf", len(X1), exact=linf_exact(P))
