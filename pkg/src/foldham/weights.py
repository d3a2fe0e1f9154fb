"""NRT and Dick weights, minimum weights of digital nets, and rank criteria.

Two independent routes to a lower bound on the minimum weight are provided:

* ``min_weight`` enumerates the dual net directly;
* ``structural_rho1_bound`` / ``structural_rho2_bound`` only inspect linear
  independence of row subsets of the generating matrices.

``verify_lemma_linear`` checks the specific row families of the folded
Hammersley matrices that make the structural bounds large.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .net import DualIndex, GeneratingMatrices, enumerate_dual
from .zb import is_linearly_independent


def decompose(k: int, b: int) -> list[tuple[int, int]]:
    """Nonzero digits of ``k`` as ``(position, digit)``, most significant first.

    Positions are 1-based, so ``k = sum digit * b**(position - 1)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = []
    pos = 1
    while k:
        k, d = divmod(k, b)
        if d:
            out.append((pos, d))
        pos += 1
    return out[::-1]


def nrt_weight(k: int, b: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    w = 0
    while k:
        k //= b
        w += 1
    return w


def dick_weight(k: int, b: int) -> int:
    parts = decompose(k, b)
    return sum(pos for pos, _ in parts[:2])


def pair_weight(k: tuple[int, int], b: int, which: str = "nrt") -> int:
    wfun = WEIGHTS[which][0]
    return wfun(k[0], b) + wfun(k[1], b)


def _nrt_candidates(b: int, n: int, cap: int) -> Iterator[int]:
    return iter(range(b ** min(cap, n)))


def _dick_candidates(b: int, n: int, cap: int) -> Iterator[int]:
    yield 0
    top = min(cap, n)
    for a1 in range(1, top + 1):
        for k1 in range(1, b):
            yield k1 * b ** (a1 - 1)
    for a1 in range(2, top + 1):
        for a2 in range(1, min(a1 - 1, cap - a1) + 1):
            for k1 in range(1, b):
                for k2 in range(1, b):
                    head = k1 * b ** (a1 - 1) + k2 * b ** (a2 - 1)
                    for low in range(b ** (a2 - 1)):
                        yield head + low


WEIGHTS = {
    "nrt": (nrt_weight, _nrt_candidates),
    "dick": (dick_weight, _dick_candidates),
}


@dataclass(frozen=True)
class MinWeightResult:
    """Minimum weight of a net, or the fact that it exceeds ``threshold_checked``."""

    which: str
    value: int | None
    witness: DualIndex | None
    threshold_checked: int

    @property
    def exceeds_threshold(self) -> bool:
        return self.value is None

    def certifies_above(self, t: int) -> bool:
        """True when the minimum weight is provably greater than ``t``."""
        if self.value is None:
            return self.threshold_checked >= t
        return self.value > t

    def __str__(self) -> str:
        if self.value is None:
            return f"> {self.threshold_checked}"
        return f"{self.value} (witness k={tuple(self.witness)})"


def min_weight(G: GeneratingMatrices, which: str, threshold: int) -> MinWeightResult:
    if which not in WEIGHTS:
        raise ValueError(f"unknown weight {which!r}")
    if threshold > G.n:
        raise ValueError(f"threshold {threshold} exceeds n={G.n}; dual pairs beyond b^n are not searched")
    duals = enumerate_dual(G, which, threshold)
    if not duals:
        return MinWeightResult(which, None, None, threshold)
    best = duals[0]
    return MinWeightResult(which, pair_weight(best, G.base, which), best, threshold)


def _rows(G: GeneratingMatrices, first: Sequence[int], second: Sequence[int]) -> list[tuple[int, ...]]:
    return [G.C1.row(i) for i in first] + [G.C2.row(i) for i in second]


def structural_rho1_bound(G: GeneratingMatrices) -> int:
    """Largest rho such that every split d1 + d2 = rho gives independent leading rows.

    Any such rho guarantees the minimum NRT weight exceeds rho.
    """
    n = G.n
    for rho in range(1, 2 * n + 1):
        for d1 in range(rho + 1):
            d2 = rho - d1
            if d1 > n or d2 > n:
                return rho - 1
            if not is_linearly_independent(_rows(G, range(1, d1 + 1), range(1, d2 + 1)), G.base):
                return rho - 1
    return 2 * n


def _dick_patterns(top: int) -> list[tuple[int, tuple[int, ...]]]:
    # (index sum, maximal row family) for v = 0, v = 1 and v >= 2.
    pats = [(0, ())]
    pats += [(i, (i,)) for i in range(1, top + 1)]
    pats += [
        (i1 + i2, tuple(range(1, i2 + 1)) + (i1,))
        for i1 in range(2, top + 1)
        for i2 in range(1, i1)
    ]
    return pats


def structural_rho2_bound(G: GeneratingMatrices) -> int:
    """Largest rho for which the Dick-weight row-independence criterion holds.

    Each side is summarised by its largest index ``i1`` and second largest
    ``i2``; the family of all rows up to ``i2`` plus row ``i1`` contains every
    other family with the same top indices, so only those are checked. Index
    patterns are visited in increasing order of their index sum and the scan
    stops at the first dependent family (capped at ``2n``).
    """
    m, n = G.m, G.n
    if n < 2 * m:
        raise ValueError(f"criterion needs n >= 2m, got n={n}, m={m}")
    cap = 2 * n
    pats = _dick_patterns(2 * m)
    combos = sorted(
        (s1 + s2, r1, r2)
        for s1, r1 in pats
        for s2, r2 in pats
        if 0 < s1 + s2 <= cap
    )
    for s, r1, r2 in combos:
        if not is_linearly_independent(_rows(G, r1, r2), G.base):
            return s - 1
    return cap


@dataclass
class LemmaItem:
    item: int
    instances: int = 0
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


@dataclass
class LemmaReport:
    base: int
    m: int
    n: int
    items: list[LemmaItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)


def _lemma_linear_families(m: int, n: int) -> Iterator[tuple[int, str, list[int], list[int]]]:
    # Yields (item, label, rows of C1, rows of C2), all 1-based.
    for r in range(m):
        yield 1, f"r={r}", list(range(1, r + 1)), list(range(1, m - r))
    # Item 2 is stated for 0 <= r <= m-2 but r is a row index; start at 1.
    for r in range(1, m - 1):
        yield 2, f"C2 row r={r}", list(range(1, m - 1)), [r]
        yield 2, f"C1 row r={r}", [r], list(range(1, m - 1))
    for j in (1, 2):
        for r in range(m - 1):
            for s in range(m - 1, n + 1):
                c1 = list(range(1, r + 1))
                c2 = list(range(1, m - 1 - r))
                (c1 if j == 1 else c2).append(s)
                yield 3, f"j={j} r={r} s={s}", c1, c2
    top = m - 2
    for r11 in range(2, top + 1):
        for r12 in range(1, r11):
            for r21 in range(2, top + 1):
                for r22 in range(1, r21):
                    if r11 + r12 + r21 + r22 <= 2 * m - 3:
                        label = f"r11={r11} r12={r12} r21={r21} r22={r22}"
                        yield 4, label, list(range(1, r12 + 1)) + [r11], list(range(1, r22 + 1)) + [r21]


def verify_lemma_linear(b: int, m: int, n: int) -> LemmaReport:
    """Check every row family of Items 1-4 on the folded matrices for ``(b, m, n)``."""
    from .constructions import folded_matrices

    G = folded_matrices(b, m, n)
    report = LemmaReport(b, m, n, [LemmaItem(i) for i in (1, 2, 3, 4)])
    for item, label, c1, c2 in _lemma_linear_families(m, n):
        entry = report.items[item - 1]
        entry.instances += 1
        if entry.failure is None and not is_linearly_independent(_rows(G, c1, c2), b):
            entry.failure = label
    return report
