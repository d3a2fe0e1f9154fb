import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foldham.constructions import folded_matrices, hammersley_matrices
from foldham.net import GeneratingMatrices, is_dual
from foldham.weights import (
    decompose,
    dick_weight,
    min_weight,
    nrt_weight,
    pair_weight,
    structural_rho1_bound,
    structural_rho2_bound,
    verify_lemma_linear,
)
from foldham.zb import MatrixZb

from test_net import brute_dual


def test_nrt_examples():
    assert nrt_weight(0, 2) == 0
    assert nrt_weight(5, 2) == 3
    assert pair_weight((5, 3), 2, "nrt") == 5


def test_dick_examples():
    assert dick_weight(0, 2) == 0
    assert dick_weight(4, 2) == 3
    assert dick_weight(6, 2) == 5


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_decomposition_and_weight_ordering(b, k):
    parts = decompose(k, b)
    assert sum(d * b ** (a - 1) for a, d in parts) == k
    assert (len(parts) == 0) == (k == 0)
    assert nrt_weight(k, b) <= dick_weight(k, b) <= 2 * nrt_weight(k, b)


@given(st.integers(2, 7), st.integers(1, 40))
def test_weight_of_pure_power(b, a):
    assert nrt_weight(b ** (a - 1), b) == dick_weight(b ** (a - 1), b) == a


def test_min_weight_examples():
    r = min_weight(folded_matrices(2, 1, 2), "nrt", 2)
    assert r.value == 2
    # (0,3) and (1,1) both have weight 2; ties go to the smaller (k1, k2).
    assert r.witness == (0, 3)
    assert (1, 1) in brute_dual(folded_matrices(2, 1, 2), nrt_weight, 2)

    r = min_weight(folded_matrices(2, 2, 4), "nrt", 4)
    assert (r.value, r.witness) == (2, (1, 1))
    r = min_weight(folded_matrices(2, 2, 4), "dick", 4)
    assert r.value == 2 and r.value > 2 * 2 - 3


def test_min_weight_threshold_beyond_n_rejected():
    with pytest.raises(ValueError):
        min_weight(folded_matrices(2, 2, 4), "nrt", 5)


def test_min_weight_exceeds_marker():
    r = min_weight(hammersley_matrices(2, 3), "nrt", 3)
    assert r.value is None and r.exceeds_threshold
    assert r.certifies_above(3) and not r.certifies_above(4)


@pytest.mark.parametrize("G", [folded_matrices(2, 3, 6), folded_matrices(3, 2, 5), hammersley_matrices(2, 4), folded_matrices(4, 2, 4)])
@pytest.mark.parametrize("which,wfun", [("nrt", nrt_weight), ("dick", dick_weight)])
def test_min_weight_against_brute_force(G, which, wfun):
    pairs = brute_dual(G, wfun, G.n)
    r = min_weight(G, which, G.n)
    if pairs:
        assert (r.value, r.witness) == (pair_weight(pairs[0], G.base, which), pairs[0])
    else:
        assert r.value is None


@pytest.mark.parametrize("G", [folded_matrices(2, 3, 6), folded_matrices(3, 2, 4), folded_matrices(2, 4, 11)])
@pytest.mark.parametrize("which", ["nrt", "dick"])
def test_min_weight_swap_invariant(G, which):
    a = min_weight(G, which, G.n)
    b = min_weight(G.swapped(), which, G.n)
    assert a.value == b.value
    k1, k2 = b.witness
    assert is_dual(G, (k2, k1))
    assert pair_weight((k2, k1), G.base, which) == a.value


def test_structural_rho1_examples():
    assert structural_rho1_bound(folded_matrices(2, 2, 4)) == 1
    assert structural_rho1_bound(hammersley_matrices(2, 2)) >= 1
    Z = MatrixZb.zeros(4, 2, 2)
    assert structural_rho1_bound(GeneratingMatrices(Z, Z)) == 0


def test_structural_rho2_examples():
    assert structural_rho2_bound(folded_matrices(2, 3, 6)) >= 3
    assert structural_rho2_bound(folded_matrices(2, 2, 4)) >= 1
    assert structural_rho2_bound(folded_matrices(2, 1, 2)) >= 0
    with pytest.raises(ValueError):
        structural_rho2_bound(hammersley_matrices(2, 3))


def brute_rho1_criterion(G, rho):
    """Lemma hypothesis checked on every split, without the monotone scan."""
    from foldham.zb import is_linearly_independent

    for d1 in range(rho + 1):
        d2 = rho - d1
        if d1 > G.n or d2 > G.n:
            return False
        rows = [G.C1.row(i) for i in range(1, d1 + 1)] + [G.C2.row(i) for i in range(1, d2 + 1)]
        if not is_linearly_independent(rows, G.base):
            return False
    return True


def brute_rho2_criterion(G, rho):
    """Every index family (all v_j, all lower indices) with small enough top sums."""
    from foldham.zb import is_linearly_independent

    top = 2 * G.m

    def families():
        for v in range(0, top + 1):
            for idx in itertools.combinations(range(1, top + 1), v):
                s = sum(sorted(idx, reverse=True)[:2])
                yield s, idx

    fams = list(families())
    for s1, i1 in fams:
        for s2, i2 in fams:
            if s1 + s2 <= rho and s1 + s2 > 0:
                rows = [G.C1.row(i) for i in i1] + [G.C2.row(i) for i in i2]
                if not is_linearly_independent(rows, G.base):
                    return False
    return True


@pytest.mark.parametrize("G", [folded_matrices(2, 2, 4), folded_matrices(3, 2, 4), folded_matrices(2, 3, 6), folded_matrices(4, 2, 5)])
def test_structural_bounds_match_unreduced_criteria(G):
    s1 = structural_rho1_bound(G)
    assert all(brute_rho1_criterion(G, r) for r in range(s1 + 1))
    assert not brute_rho1_criterion(G, s1 + 1)
    s2 = structural_rho2_bound(G)
    assert brute_rho2_criterion(G, s2)
    assert not brute_rho2_criterion(G, s2 + 1)


@pytest.mark.parametrize("b,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 3), (5, 2)])
def test_structural_bounds_below_enumerated(b, m):
    G = folded_matrices(b, m, 2 * m)
    s1, s2 = structural_rho1_bound(G), structural_rho2_bound(G)
    assert s1 >= m - 1 and s2 >= 2 * m - 3
    assert min_weight(G, "nrt", G.n).certifies_above(s1)
    assert min_weight(G, "dick", G.n).certifies_above(s2)


def test_verify_lemma_linear_examples():
    for b, m, n in [(2, 4, 8), (3, 5, 10)]:
        rep = verify_lemma_linear(b, m, n)
        assert rep.passed, rep
        assert all(it.instances > 0 for it in rep.items[:3])
    # Item 4 first has instances at m = 5 (2+1+2+1 <= 2m-3).
    assert verify_lemma_linear(2, 4, 8).items[3].instances == 0
    assert verify_lemma_linear(3, 5, 10).items[3].instances > 0
    rep = verify_lemma_linear(2, 2, 4)
    assert rep.passed
    assert rep.items[1].instances == 0 and rep.items[3].instances == 0


def test_verify_lemma_linear_instance_counts():
    # Item 1: m sets; Item 2: 2(m-2); Item 3: 2(m-1)(n-m+2).
    m, n = 5, 11
    rep = verify_lemma_linear(3, m, n)
    assert [it.instances for it in rep.items[:3]] == [m, 2 * (m - 2), 2 * (m - 1) * (n - m + 2)]
    expected4 = sum(
        1
        for r11, r12, r21, r22 in itertools.product(range(1, m - 1), repeat=4)
        if r12 < r11 and r22 < r21 and r11 + r12 + r21 + r22 <= 2 * m - 3
    )
    assert rep.items[3].instances == expected4


def test_verify_lemma_linear_reports_failure_on_other_matrices(monkeypatch):
    import foldham.constructions as c

    monkeypatch.setattr(c, "folded_matrices", lambda b, m, n: hammersley_like(b, m, n))
    rep = verify_lemma_linear(2, 3, 6)
    assert not rep.passed
    assert rep.items[0].failure is not None


def hammersley_like(b, m, n):
    # Both matrices equal: c_{1,1} = c_{2,1} breaks Item 1 at r = 1.
    rows = tuple(tuple(1 if j == min(i, m - 1) else 0 for j in range(m)) for i in range(n))
    M = MatrixZb(rows, b)
    return GeneratingMatrices(M, M)
