import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardy_toeplitz import Q, QQi
from hardy_toeplitz.basis import enumerate_basis
from hardy_toeplitz.diagnostics import block_norm
from hardy_toeplitz.experiments import random_unitary
from hardy_toeplitz.operators import (
    TrustExhausted,
    add,
    adjoint,
    composition_op,
    identity_op,
    multiply,
    rank_one,
    scale,
    toeplitz_op,
)
from hardy_toeplitz.phi import cesaro_mean, cesaro_means, phi_apply, phi_in_frame, phi_iterate
from hardy_toeplitz.symbols import PolySelfMap, SphereSymbol
from strategies import contractions, gaussian_rationals, multi_indices, symbols

B = enumerate_basis(2, 6)
z = SphereSymbol.coordinate


def phi_by_products(A):
    """Phi(A) as the literal sum of T_{zbar_j} A T_{z_j}."""
    total = None
    for j in range(A.basis.n):
        T = toeplitz_op(z(A.basis.n, j), A.basis)
        term = multiply(adjoint(T), multiply(A, T))
        total = term if total is None else add(total, term)
    return total


@given(symbols(2))
def test_shift_rule_matches_definition(f):
    A = multiply(toeplitz_op(f, B), composition_op(PolySelfMap.linear([[Q(1, 2), Q(1, 4)], [0, 1]]), B))
    P = phi_apply(A)
    assert P.equals(phi_by_products(A), min(P.valid_degree, phi_by_products(A).valid_degree))


@given(symbols(2, max_degree=3))
def test_toeplitz_operators_are_fixed_points(f):
    T = toeplitz_op(f, B)
    assert phi_apply(T).equals(T)


def test_validity_shrinks_by_one():
    T = toeplitz_op(z(2, 0), B)
    P = phi_apply(T)
    assert (P.valid_rows, P.valid_cols) == (T.valid_rows - 1, T.valid_cols - 1)


@given(symbols(2), symbols(2))
def test_linearity(f, g):
    A, C = toeplitz_op(f, B), composition_op(PolySelfMap.linear([[0, Q(1, 2)], [Q(1, 3), 0]]), B)
    assert phi_apply(add(A, C)).equals(add(phi_apply(A), phi_apply(C)))


@given(contractions(2), symbols(2, max_degree=1))
def test_contraction(phi, f):
    A = multiply(toeplitz_op(f, B), composition_op(phi, B))
    if A.valid_degree < 1:
        return
    P = phi_apply(A)
    assert block_norm(P) <= block_norm(A, P.valid_degree) + 1e-10


@given(st.dictionaries(multi_indices(2, 3), gaussian_rationals, min_size=1, max_size=3), contractions(2))
def test_positivity(u, phi):
    # C_phi^* (u (x) u) C_phi is positive semidefinite; so is its image under Phi
    C = composition_op(phi, B)
    A = multiply(adjoint(C), multiply(rank_one(u, u, B), C))
    P = phi_apply(A)
    if P.valid_degree < 0:
        return
    M = P.orthonormal(P.valid_degree)
    assert np.allclose(M, M.conj().T, atol=1e-12)
    assert np.linalg.eigvalsh(M).min() >= -1e-10


def test_rank_one_dies_after_its_degree():
    v = {(2, 1): 1, (0, 0): 1}
    u = {(2, 1): 1, (0, 3): QQi(0, 1), (1, 1): 2}
    K = rank_one(u, v, B)
    iterates = phi_iterate(K, 4)
    assert any(x != 0 for x in iterates[2].block().ravel())
    assert all(x == 0 for x in iterates[3].block().ravel())


def test_iterate_errors_name_the_limit():
    T = toeplitz_op(z(2, 0), enumerate_basis(2, 3))
    with pytest.raises(TrustExhausted, match="max usable m is 3"):
        phi_iterate(T, 4)
    with pytest.raises(ValueError):
        phi_iterate(T, 0)
    X = phi_iterate(T, 3)[-1]
    with pytest.raises(TrustExhausted):
        phi_apply(phi_apply(X))


def test_cesaro_means():
    lam = Q(1, 2)
    C = composition_op(PolySelfMap.linear([[lam, 0], [0, lam]]), B)
    means = cesaro_means(C, 3)
    iters = phi_iterate(C, 3)
    expected = scale(Q(1, 3), add(add(iters[0], iters[1]), iters[2]))
    assert means[-1].equals(expected)
    assert cesaro_mean(C, 3).equals(expected)
    # Phi^j(C_{lam z}) = lam^j C_{lam z}
    for j, X in enumerate(iters, start=1):
        assert X.equals(scale(lam ** j, C))


def test_frame_examples():
    A = composition_op(PolySelfMap.linear([[Q(1, 2), 0], [0, Q(1, 3)]]), enumerate_basis(2, 8))
    ref = phi_apply(A)
    d = ref.valid_degree
    assert np.allclose(phi_in_frame(A, np.eye(2)).orthonormal(d), ref.orthonormal(d), atol=1e-12)
    perm = phi_in_frame(A, np.array([[0, 1], [1, 0]]), rational_lift=True)
    assert perm.exact and perm.equals(ref, d)
    c = np.cos(np.pi / 4)
    rot = np.array([[c, -c], [c, c]])
    assert np.allclose(phi_in_frame(A, rot).orthonormal(d), ref.orthonormal(d), atol=1e-10)
    with pytest.raises(ValueError):
        phi_in_frame(A, np.array([[1, 1], [0, 1]]))


def test_frame_random_unitaries(rng):
    A = multiply(toeplitz_op(z(2, 0) * z(2, 1, True), B), composition_op(PolySelfMap.linear([[0, 0], [1, 0]]), B))
    ref = phi_apply(A)
    d = min(ref.valid_degree, phi_in_frame(A, np.eye(2)).valid_degree)
    for _ in range(3):
        U = random_unitary(2, rng)
        assert np.allclose(phi_in_frame(A, U).orthonormal(d), ref.orthonormal(d), atol=1e-10)


def test_identity_is_fixed():
    assert phi_apply(identity_op(B)).equals(identity_op(B))
