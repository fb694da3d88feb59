import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hardy_toeplitz import Q, QQi
from hardy_toeplitz.oracle import mc_pairing, sphere_sample
from hardy_toeplitz.symbols import (
    PolySelfMap,
    SphereSymbol,
    eval_symbol,
    exceptional_set_fraction,
    pairing_symbol,
    sphere_integral,
    sup_norm_estimate,
    symbol_conj,
    symbol_power,
    symbol_product,
)
from strategies import poly_maps, symbols

z = SphereSymbol.coordinate


def test_pairing_examples():
    one = pairing_symbol(PolySelfMap.identity(2), PolySelfMap.identity(2))
    assert one == SphereSymbol.sphere_one(2)
    shift = PolySelfMap(2, [{}, {(1, 0): 1}])
    assert pairing_symbol(shift, PolySelfMap.identity(2)) == z(2, 1, True) * z(2, 0)
    A = PolySelfMap.linear([[Q(1, 2), 0], [0, Q(1, 3)]])
    expected = Q(1, 2) * (z(2, 0) * z(2, 0, True)) + Q(1, 3) * (z(2, 1) * z(2, 1, True))
    assert pairing_symbol(A, PolySelfMap.identity(2)) == expected


def test_product_conj_power_examples():
    f = z(2, 0) * z(2, 1, True)
    assert symbol_power(f, 2) == SphereSymbol.monomial((2, 0), (0, 2))
    assert symbol_conj(f) == SphereSymbol.monomial((0, 1), (1, 0))
    assert symbol_product(z(2, 0), z(2, 0, True)) == SphereSymbol.monomial((1, 0), (1, 0))
    assert symbol_power(f, 0) == SphereSymbol.constant(2)
    with pytest.raises(ValueError):
        symbol_power(f, -1)


def test_canonical_form_drops_zeros():
    f = z(2, 0) - z(2, 0)
    assert f.is_zero and f.coeffs == {}
    assert f.holomorphic_degree == 0


def test_degrees():
    f = SphereSymbol.monomial((2, 1), (0, 1)) + SphereSymbol.monomial((0, 0), (3, 0))
    assert f.holomorphic_degree == 3
    assert f.antiholomorphic_degree == 3
    assert f.net_degree == 2
    assert f.conj().net_degree == 3


@given(symbols(2), symbols(2))
def test_evaluation_is_a_ring_homomorphism(f, g):
    Z = sphere_sample(2, 50, seed=0)
    np.testing.assert_allclose(eval_symbol(f * g, Z), eval_symbol(f, Z) * eval_symbol(g, Z), atol=1e-9)
    np.testing.assert_allclose(eval_symbol(f + g, Z), eval_symbol(f, Z) + eval_symbol(g, Z), atol=1e-9)
    np.testing.assert_allclose(eval_symbol(f.conj(), Z), np.conj(eval_symbol(f, Z)), atol=1e-9)


@given(symbols(2, max_degree=2))
def test_sphere_integral_matches_oracle(f):
    est, se = mc_pairing(f, SphereSymbol.constant(2), N=20_000, seed=11)
    assert abs(est - complex(sphere_integral(f))) <= 5 * se + 1e-9


@given(symbols(2), st.integers(0, 3))
def test_power_is_repeated_product(f, m):
    p = SphereSymbol.constant(2)
    for _ in range(m):
        p = p * f
    assert f ** m == p


@given(symbols(2))
def test_json_round_trip(f):
    assert SphereSymbol.from_json(f.to_json()) == f


@given(poly_maps(2))
def test_map_json_round_trip(phi):
    assert PolySelfMap.from_json(phi.to_json()) == phi


def test_eval_rejects_off_sphere_points():
    with pytest.raises(ValueError):
        eval_symbol(z(2, 0), [1.0, 1.0])
    with pytest.raises(ValueError):
        eval_symbol(z(2, 0), [1.0, 0.0, 0.0])


def test_self_map_helpers():
    phi = PolySelfMap.affine([[Q(1, 2), 0], [0, Q(1, 2)]], [Q(1, 4), 0])
    assert phi.degree == 1 and not phi.vanishes_at_origin() and not phi.is_linear()
    assert phi.exact
    np.testing.assert_allclose(phi([0.5, 0.5]), [0.5, 0.25])
    sq = PolySelfMap(1, [{(2,): 1}])
    assert sq.compose_poly({(1,): QQi(1), (0,): QQi(2)}) == {(2,): QQi(1), (0,): QQi(2)}
    assert sq.power((3,)) == {(6,): QQi(1)}
    with pytest.raises(ValueError):
        PolySelfMap(2, [{}])


def test_sup_norm_estimate_is_a_lower_bound():
    f = Q(1, 2) * (z(2, 0) * z(2, 0, True)) + Q(1, 3) * (z(2, 1) * z(2, 1, True))
    s = sup_norm_estimate(f, N=100_000, seed=0)
    assert 0.49 < s <= 0.5 + 1e-12


def test_exceptional_set_fraction():
    ident = PolySelfMap.identity(2)
    A = PolySelfMap.linear([[1, 0], [0, Q(1, 2)]])
    # <Az, z> = |z1|^2 + |z2|^2 / 2 reaches 1 only at |z1| = 1: a null set
    frac = exceptional_set_fraction(A, ident, 1e-3, N=100_000, seed=0)
    assert frac < 0.01
    assert exceptional_set_fraction(ident, ident, 1e-3, N=1000, seed=0) == 1.0
    with pytest.raises(ValueError):
        exceptional_set_fraction(A, ident, 0.0)
