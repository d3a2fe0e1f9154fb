"""Digital nets in two dimensions: point generation and the dual net.

Points are exact: coordinate ``j`` of a point is ``num_j / b**scale``.

Dual enumeration only looks at ``k < b**n``. That restriction is lossless for
every minimum-weight question asked here: if ``k >= b**n`` its top nonzero digit
sits at position ``n + 1`` or higher, so both its NRT weight and its Dick
weight are at least ``n + 1``. Callers therefore only ask for caps ``W <= n``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .zb import MatrixZb, mat_vec_mul


@dataclass(frozen=True)
class GeneratingMatrices:
    C1: MatrixZb
    C2: MatrixZb

    def __post_init__(self):
        if self.C1.base != self.C2.base:
            raise ValueError("generating matrices must share a base")
        if (self.C1.nrows, self.C1.ncols) != (self.C2.nrows, self.C2.ncols):
            raise ValueError("generating matrices must have equal shape")
        if self.m > self.n:
            raise ValueError(f"need m <= n, got m={self.m}, n={self.n}")

    @property
    def base(self) -> int:
        return self.C1.base

    @property
    def n(self) -> int:
        return self.C1.nrows

    @property
    def m(self) -> int:
        return self.C1.ncols

    def swapped(self) -> "GeneratingMatrices":
        return GeneratingMatrices(self.C2, self.C1)


@dataclass(frozen=True, order=True)
class NetPoint:
    num1: int
    num2: int
    scale: int
    base: int

    def __post_init__(self):
        top = self.base**self.scale
        if not (0 <= self.num1 < top and 0 <= self.num2 < top):
            raise ValueError(f"numerators must lie in [0, {top})")

    @property
    def denominator(self) -> int:
        return self.base**self.scale

    def coords(self) -> tuple[Fraction, Fraction]:
        d = self.denominator
        return Fraction(self.num1, d), Fraction(self.num2, d)

    def rescaled(self, scale: int) -> "NetPoint":
        """The same point expressed at a finer ``scale``."""
        if scale < self.scale:
            raise ValueError("can only rescale to a finer scale")
        f = self.base ** (scale - self.scale)
        return NetPoint(self.num1 * f, self.num2 * f, scale, self.base)


@dataclass(frozen=True)
class DigitalNet:
    """An ordered multiset of ``b**m`` points plus the matrices behind them."""

    points: tuple[NetPoint, ...]
    matrices: GeneratingMatrices

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[NetPoint]:
        return iter(self.points)

    @property
    def scale(self) -> int:
        return self.points[0].scale

    def numerators(self, scale: int | None = None) -> list[tuple[int, int]]:
        scale = self.scale if scale is None else scale
        return [(p.num1, p.num2) for p in (q.rescaled(scale) for q in self.points)]

    def coords(self) -> list[tuple[Fraction, Fraction]]:
        return [p.coords() for p in self.points]


class DualIndex(NamedTuple):
    k1: int
    k2: int


def int_to_digits(a: int, b: int, length: int) -> tuple[int, ...]:
    """The first ``length`` base-``b`` digits of ``a``, least significant first."""
    out = []
    for _ in range(length):
        a, d = divmod(a, b)
        out.append(d)
    return tuple(out)


def digits_to_numerator(y: tuple[int, ...], b: int) -> int:
    """``sum y_i b**(n-i)``: the numerator of ``y_1/b + ... + y_n/b**n`` at scale n."""
    num = 0
    for d in y:
        num = num * b + d
    return num


def generate_points(G: GeneratingMatrices) -> DigitalNet:
    b, m, n = G.base, G.m, G.n
    pts = []
    for a in range(b**m):
        avec = int_to_digits(a, b, m)
        y1 = mat_vec_mul(G.C1, avec)
        y2 = mat_vec_mul(G.C2, avec)
        pts.append(NetPoint(digits_to_numerator(y1, b), digits_to_numerator(y2, b), n, b))
    return DigitalNet(tuple(pts), G)


def syndrome(C: MatrixZb, k: int) -> tuple[int, ...]:
    """``C^T vec(k)`` where ``vec(k)`` holds the first ``n`` digits of ``k``."""
    b, n, m = C.base, C.nrows, C.ncols
    acc = [0] * m
    for l, kappa in enumerate(int_to_digits(k, b, n)):
        if kappa:
            row = C.rows[l]
            for i in range(m):
                acc[i] += kappa * row[i]
    return tuple(x % b for x in acc)


def is_dual(G: GeneratingMatrices, d: tuple[int, int]) -> bool:
    k1, k2 = d
    if k1 < 0 or k2 < 0:
        raise ValueError("dual indices are nonnegative")
    s1 = syndrome(G.C1, k1)
    s2 = syndrome(G.C2, k2)
    return all((x + y) % G.base == 0 for x, y in zip(s1, s2))


def enumerate_dual(G: GeneratingMatrices, weight: str, cap: int) -> list[DualIndex]:
    """All nonzero dual pairs with ``k1, k2 < b**n`` and total weight <= ``cap``.

    ``weight`` is ``"nrt"`` or ``"dick"``. Only integers whose own weight is at
    most ``cap`` are generated, and pairs are matched through a syndrome table
    instead of a double loop. Output is sorted by total weight, then ``(k1, k2)``.
    """
    from .weights import WEIGHTS

    if cap < 0:
        raise ValueError("cap must be nonnegative")
    try:
        wfun, candidates = WEIGHTS[weight]
    except KeyError:
        raise ValueError(f"unknown weight {weight!r}") from None
    b, n = G.base, G.n
    ks = sorted((wfun(k, b), k) for k in candidates(b, n, cap))

    by_syndrome: dict[tuple[int, ...], list[tuple[int, int]]] = defaultdict(list)
    for w, k in ks:
        by_syndrome[syndrome(G.C1, k)].append((w, k))

    found = []
    for w2, k2 in ks:
        target = tuple((-x) % b for x in syndrome(G.C2, k2))
        for w1, k1 in by_syndrome.get(target, ()):
            if w1 + w2 > cap:
                break
            if k1 or k2:
                found.append((w1 + w2, k1, k2))
    found.sort()
    return [DualIndex(k1, k2) for _, k1, k2 in found]
