from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hardy_toeplitz.basis import enumerate_basis, monomial_norm_sq, multi_indices_of_degree
from hardy_toeplitz.oracle import mc_pairing
from hardy_toeplitz.symbols import SphereSymbol


# oracle first: the closed form must match brute-force sphere integration
@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (1, 1), (2, 1), (0, 0, 1), (1, 1, 1), (2, 0, 1)])
def test_weight_matches_monte_carlo(alpha):
    m = SphereSymbol.monomial(alpha)
    est, se = mc_pairing(m, m, N=200_000, seed=7)
    assert abs(est - float(monomial_norm_sq(alpha, len(alpha)))) <= 4 * se


def test_documented_values():
    assert monomial_norm_sq((0, 0), 2) == 1
    assert monomial_norm_sq((1, 0), 2) == mpq(1, 2)
    assert monomial_norm_sq((1, 1), 2) == mpq(1, 6)
    assert all(monomial_norm_sq((k,), 1) == 1 for k in range(10))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        monomial_norm_sq((1, 0), 3)
    with pytest.raises(ValueError):
        monomial_norm_sq((-1, 0), 2)


@pytest.mark.parametrize("n,D,size", [(1, 3, 4), (2, 2, 6), (3, 8, 165), (2, 10, 66)])
def test_basis_sizes(n, D, size):
    B = enumerate_basis(n, D)
    assert len(B) == size == comb(D + n, n)


def test_small_basis_order():
    assert list(enumerate_basis(1, 3)) == [(0,), (1,), (2,), (3,)]
    assert list(enumerate_basis(2, 2)) == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


@given(st.integers(1, 3), st.integers(0, 6))
def test_basis_invariants(n, D):
    B = enumerate_basis(n, D)
    degs = B.degrees
    assert list(degs) == sorted(degs)
    assert len(set(B.indices)) == len(B)
    assert all(B.index(a) == i for i, a in enumerate(B))
    assert all(w > 0 for w in B.weights) and B.weight((0,) * n) == 1
    for d in range(D + 1):
        block = B.block(d)
        assert all(sum(B[i]) <= d for i in block)
        assert len(block) == comb(d + n, n)
    # deterministic, and each degree is in the documented lexicographic order
    assert B.indices == enumerate_basis.__wrapped__(n, D).indices
    for d in range(D + 1):
        assert multi_indices_of_degree(n, d) == sorted(multi_indices_of_degree(n, d), reverse=True)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.randoms())
def test_weight_is_permutation_symmetric(alpha, rnd):
    beta = list(alpha)
    rnd.shuffle(beta)
    assert monomial_norm_sq(tuple(alpha), len(alpha)) == monomial_norm_sq(tuple(beta), len(beta))


@given(st.lists(st.integers(0, 4), min_size=1, max_size=3))
def test_weight_recursion(alpha):
    # sum_j omega(alpha + e_j) = omega(alpha): |z|^2 = 1 on the sphere
    n = len(alpha)
    total = sum(monomial_norm_sq(tuple(a + (i == j) for i, a in enumerate(alpha)), n) for j in range(n))
    assert total == monomial_norm_sq(tuple(alpha), n)


def test_shift_table():
    B = enumerate_basis(2, 2)
    s = B.shift(0)
    assert B[s[B.index((0, 1))]] == (1, 1)
    assert s[B.index((0, 2))] == -1


def test_invalid_inputs():
    with pytest.raises(ValueError):
        enumerate_basis(0, 3)
    with pytest.raises(ValueError):
        enumerate_basis(2, -1)
