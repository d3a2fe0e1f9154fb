"""Arithmetic and linear algebra over the residue ring Z_b.

Digits are plain Python ints in ``range(b)``; the base travels alongside as an
explicit argument. ``b`` need not be prime, so linear independence is decided
by Gaussian elimination only when Z_b is a field and by exhaustive search over
coefficient tuples otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

DigitVector = tuple[int, ...]

# Largest number of coefficient tuples the ring-exhaustive check will visit.
EXHAUSTIVE_CAP = 10**7


def is_prime(b: int) -> bool:
    if b < 2:
        return False
    return all(b % p for p in range(2, int(b**0.5) + 1))


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


def _check_digit(a: int, b: int) -> None:
    if not 0 <= a < b:
        raise ValueError(f"{a} is not a digit in base {b}")


def add_mod(a: int, c: int, b: int) -> int:
    _check_base(b)
    _check_digit(a, b)
    _check_digit(c, b)
    return (a + c) % b


def neg_mod(a: int, b: int) -> int:
    _check_base(b)
    _check_digit(a, b)
    return (-a) % b


def sub_mod(a: int, c: int, b: int) -> int:
    # a - c = a + (b-1)*c in Z_b
    _check_base(b)
    _check_digit(a, b)
    _check_digit(c, b)
    return (a + (b - 1) * c) % b


@dataclass(frozen=True)
class MatrixZb:
    """An ``n x m`` matrix over Z_b stored row-major as nested tuples."""

    rows: tuple[DigitVector, ...]
    base: int

    def __post_init__(self):
        _check_base(self.base)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged matrix rows")
            for x in r:
                _check_digit(x, self.base)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zeros(cls, n: int, m: int, b: int) -> "MatrixZb":
        return cls(tuple((0,) * m for _ in range(n)), b)

    @classmethod
    def from_entries(cls, n: int, m: int, b: int, entries: dict[tuple[int, int], int]) -> "MatrixZb":
        """Build from a sparse ``{(row, col): value}`` map with 1-based indices."""
        grid = [[0] * m for _ in range(n)]
        for (i, j), v in entries.items():
            grid[i - 1][j - 1] = v % b
        return cls(tuple(tuple(r) for r in grid), b)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def row(self, l: int) -> DigitVector:
        """Row ``l`` with 1-based indexing, matching ``c_{j,l}`` notation."""
        if not 1 <= l <= self.nrows:
            raise IndexError(f"row {l} out of range 1..{self.nrows}")
        return self.rows[l - 1]

    def transpose(self) -> "MatrixZb":
        return MatrixZb(tuple(zip(*self.rows)), self.base)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def mat_vec_mul(M: MatrixZb, v: Sequence[int]) -> DigitVector:
    if len(v) != M.ncols:
        raise ValueError(f"dimension mismatch: {M.ncols} columns, vector of length {len(v)}")
    b = M.base
    for x in v:
        _check_digit(x, b)
    return tuple(sum(x * y for x, y in zip(r, v)) % b for r in M.rows)


def _rank_mod_prime(vectors: Sequence[DigitVector], p: int) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def independent_by_elimination(vectors: Sequence[DigitVector], p: int) -> bool:
    """Independence over the field Z_p (``p`` prime) via row reduction."""
    return _rank_mod_prime(vectors, p) == len(vectors)


def independent_by_enumeration(vectors: Sequence[DigitVector], b: int) -> bool:
    """Independence over the ring Z_b by trying every coefficient tuple.

    Tuples are scanned in chunks with numpy; the all-zero tuple is index 0 and
    is skipped.
    """
    k = len(vectors)
    if k == 0:
        return True
    total = b**k
    if total > EXHAUSTIVE_CAP:
        raise ValueError(f"{b}^{k} coefficient tuples exceed the exhaustive cap {EXHAUSTIVE_CAP}")
    V = np.asarray(vectors, dtype=np.int64)
    powers = b ** np.arange(k - 1, -1, -1, dtype=np.int64)
    chunk = 1 << 16
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % b
        combo = (coeffs @ V) % b
        if np.any(~combo.any(axis=1)):
            return False
    return True


def is_linearly_independent(vectors: Iterable[Sequence[int]], base: int) -> bool:
    """True iff only the zero combination of ``vectors`` vanishes over Z_b."""
    _check_base(base)
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        return True
    length = len(vecs[0])
    for v in vecs:
        if len(v) != length:
            raise ValueError("vectors must share one length")
        for x in v:
            _check_digit(x, base)
    if any(not any(v) for v in vecs):
        return False
    # More than `length` vectors in Z_b^length are always dependent (McCoy).
    if len(vecs) > length:
        return False
    if is_prime(base):
        return independent_by_elimination(vecs, base)
    return independent_by_enumeration(vecs, base)
