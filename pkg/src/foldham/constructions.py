"""Hammersley and folded Hammersley point sets in base ``b``.

Each family is available two ways: evaluated straight from its digit formula,
and as a digital net from explicit generating matrices. The index digit
convention is shared by both: ``a = a_1 + a_2 b + ... + a_m b**(m-1)`` and
``a_1`` is also the leading digit of the first coordinate.
"""

from __future__ import annotations

from .net import DigitalNet, GeneratingMatrices, NetPoint, digits_to_numerator, int_to_digits
from .zb import MatrixZb


def _check(b: int, m: int, n: int | None = None) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n is not None and n < 2 * m:
        raise ValueError(f"folding depth must satisfy n >= 2m, got n={n}, m={m}")


def badic_digits(num: int, scale: int, b: int, length: int) -> tuple[int, ...]:
    """Digits ``xi_1 .. xi_length`` of ``num / b**scale``, zero-padded past ``scale``."""
    if not 0 <= num < b**scale:
        raise ValueError(f"{num}/{b}^{scale} is not in [0, 1)")
    head = int_to_digits(num, b, scale)[::-1]
    if length <= scale:
        return head[:length]
    return head + (0,) * (length - scale)


def hammersley_matrices(b: int, m: int) -> GeneratingMatrices:
    _check(b, m)
    C1 = MatrixZb.from_entries(m, m, b, {(i, i): 1 for i in range(1, m + 1)})
    C2 = MatrixZb.from_entries(m, m, b, {(i, m + 1 - i): 1 for i in range(1, m + 1)})
    return GeneratingMatrices(C1, C2)


def folded_matrices(b: int, m: int, n: int) -> GeneratingMatrices:
    _check(b, m, n)
    e1 = {(i, 1): b - 1 for i in range(1, n + 1)}
    e1.update({(i, i + 1): 1 for i in range(1, m)})
    e2 = {(i, m): b - 1 for i in range(1, n + 1)}
    e2.update({(i, m - i): 1 for i in range(1, m)})
    return GeneratingMatrices(
        MatrixZb.from_entries(n, m, b, e1),
        MatrixZb.from_entries(n, m, b, e2),
    )


def hammersley_points(b: int, m: int) -> DigitalNet:
    _check(b, m)
    pts = []
    for a in range(b**m):
        digits = int_to_digits(a, b, m)
        x1 = digits_to_numerator(digits, b)
        x2 = digits_to_numerator(digits[::-1], b)
        pts.append(NetPoint(x1, x2, m, b))
    return DigitalNet(tuple(pts), hammersley_matrices(b, m))


def baker_fold(num: int, scale: int, n: int, b: int) -> int:
    """Apply the depth-``n`` b-adic baker's transformation to ``num / b**scale``.

    Output digit ``i`` is ``xi_{i+1} - xi_1 (mod b)`` for ``i = 1..n``; the result
    is returned as a numerator at scale ``n``.
    """
    if n < 1:
        raise ValueError("depth must be >= 1")
    xi = badic_digits(num, scale, b, n + 1)
    return digits_to_numerator(tuple((d - xi[0]) % b for d in xi[1:]), b)


def folded_points(b: int, m: int, n: int) -> DigitalNet:
    _check(b, m, n)
    pts = []
    for a in range(b**m):
        d = (0,) + int_to_digits(a, b, m)  # d[i] == a_i
        first, last = d[1], d[m]
        y1 = [(d[i + 1] - first) % b for i in range(1, m)] + [(-first) % b] * (n - m + 1)
        y2 = [(d[m - i] - last) % b for i in range(1, m)] + [(-last) % b] * (n - m + 1)
        pts.append(NetPoint(digits_to_numerator(tuple(y1), b), digits_to_numerator(tuple(y2), b), n, b))
    return DigitalNet(tuple(pts), folded_matrices(b, m, n))


def folded_by_baker(b: int, m: int, n: int) -> DigitalNet:
    """The Hammersley set pushed through ``baker_fold`` componentwise."""
    _check(b, m, n)
    pts = tuple(
        NetPoint(baker_fold(p.num1, m, n, b), baker_fold(p.num2, m, n, b), n, b)
        for p in hammersley_points(b, m)
    )
    return DigitalNet(pts, folded_matrices(b, m, n))


def build(construction: str, b: int, m: int, n: int | None = None) -> DigitalNet:
    """Construct a named point set; ``n`` defaults to ``2m`` for the folded family."""
    if construction == "hammersley":
        return hammersley_points(b, m)
    if construction == "folded":
        return folded_points(b, m, 2 * m if n is None else n)
    raise ValueError(f"unknown construction {construction!r}")
