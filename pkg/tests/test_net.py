import itertools

import pytest

from foldham.constructions import folded_matrices, hammersley_matrices
from foldham.net import GeneratingMatrices, enumerate_dual, generate_points, int_to_digits, is_dual
from foldham.weights import dick_weight, nrt_weight
from foldham.zb import MatrixZb, mat_vec_mul


def brute_dual(G, weight, cap):
    """Every nonzero pair k1, k2 < b^n, checked with explicit transposed products."""
    b, n = G.base, G.n
    T1, T2 = G.C1.transpose(), G.C2.transpose()
    out = []
    for k1, k2 in itertools.product(range(b**n), repeat=2):
        if not (k1 or k2):
            continue
        w = weight(k1, b) + weight(k2, b)
        if w > cap:
            continue
        s1 = mat_vec_mul(T1, int_to_digits(k1, b, n))
        s2 = mat_vec_mul(T2, int_to_digits(k2, b, n))
        if all((x + y) % b == 0 for x, y in zip(s1, s2)):
            out.append((w, k1, k2))
    return [(k1, k2) for _, k1, k2 in sorted(out)]


def test_hammersley_points_from_matrices():
    net = generate_points(hammersley_matrices(2, 2))
    assert net.numerators() == [(0, 0), (2, 1), (1, 2), (3, 3)]
    assert net.scale == 2


def test_zero_matrices_give_origin_copies():
    Z = MatrixZb.zeros(3, 2, 3)
    net = generate_points(GeneratingMatrices(Z, Z))
    assert len(net) == 9
    assert set(net.numerators()) == {(0, 0)}


def test_folded_points_from_matrices():
    assert generate_points(folded_matrices(2, 2, 4)).numerators() == [(0, 0), (15, 8), (8, 15), (7, 7)]


def test_generating_matrices_validation():
    with pytest.raises(ValueError):
        GeneratingMatrices(MatrixZb.zeros(2, 2, 2), MatrixZb.zeros(2, 2, 3))
    with pytest.raises(ValueError):
        GeneratingMatrices(MatrixZb.zeros(2, 3, 2), MatrixZb.zeros(2, 3, 2))


def test_is_dual_examples():
    G = folded_matrices(2, 1, 2)
    assert is_dual(G, (0, 0))
    assert is_dual(G, (1, 1))
    assert not is_dual(G, (1, 0))


def test_enumerate_dual_examples():
    G = folded_matrices(2, 1, 2)
    assert enumerate_dual(G, "nrt", 1) == []
    assert (1, 1) in enumerate_dual(G, "nrt", 2)
    assert enumerate_dual(folded_matrices(3, 2, 4), "dick", 0) == []


@pytest.mark.parametrize(
    "G",
    [folded_matrices(2, 2, 4), folded_matrices(3, 1, 3), folded_matrices(2, 3, 6), hammersley_matrices(3, 2), folded_matrices(4, 1, 2)],
)
@pytest.mark.parametrize("which,wfun", [("nrt", nrt_weight), ("dick", dick_weight)])
def test_enumerate_dual_matches_brute_force(G, which, wfun):
    for cap in range(G.n + 1):
        assert enumerate_dual(G, which, cap) == brute_dual(G, wfun, cap)


@pytest.mark.parametrize("b,m", [(2, 3), (3, 2), (4, 2)])
def test_dual_membership_ignores_digits_beyond_n(b, m):
    G = folded_matrices(b, m, 2 * m)
    top = b**G.n
    for k1, k2 in itertools.product(range(0, top, max(1, top // 40)), repeat=2):
        assert is_dual(G, (k1, k2)) == is_dual(G, (k1 + top, k2)) == is_dual(G, (k1, k2 + 5 * top))


@pytest.mark.parametrize("b,m", [(3, 2), (5, 1), (4, 2)])
def test_dual_closed_under_digitwise_negation(b, m):
    G = folded_matrices(b, m, 2 * m)
    n = G.n

    def neg(k):
        return sum(((-d) % b) * b**i for i, d in enumerate(int_to_digits(k, b, n)))

    for k1, k2 in brute_dual(G, nrt_weight, n):
        assert is_dual(G, (neg(k1), neg(k2)))


@pytest.mark.parametrize("b", [2, 3, 5])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_points_distinct(b, m):
    if b**m > 700:
        pytest.skip("covered by acceptance grid")
    for G in (hammersley_matrices(b, m), folded_matrices(b, m, 2 * m)):
        net = generate_points(G)
        assert len(set(net.points)) == len(net) == b**m
