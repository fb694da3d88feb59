from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given

from hardy_toeplitz.exact import Q, QQi, as_scalar, dump_number, is_exact, parse_number
from strategies import gaussian_rationals


def test_q_helper_is_a_rational_not_a_complex():
    assert Q(1, 2) == QQi(mpq(1, 2))
    assert QQi(1, 2) == QQi(1) + QQi(0, 2)  # QQi(a, b) is a + b i
    assert Q(1, 2) != QQi(1, 2)


def test_mixing_with_floats_degrades_to_complex():
    x = Q(1, 2) + 0.25
    assert isinstance(x, complex) and x == 0.75
    assert isinstance(Q(1, 3) * 2, QQi)
    assert isinstance(Q(1, 3) * Fraction(3, 2), QQi)


def test_division_and_powers():
    z = QQi(1, 1)
    assert z * z == QQi(0, 2)
    assert (z ** 4) == QQi(-4)
    assert z / z == QQi(1)
    assert 1 / QQi(0, 1) == QQi(0, -1)
    with pytest.raises(ZeroDivisionError):
        z / QQi(0)


@given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * a.conjugate()) == QQi(a.abs2())
    assert complex(a * b) == pytest.approx(complex(a) * complex(b))


@given(gaussian_rationals)
def test_json_round_trip(a):
    assert parse_number(dump_number(a)) == a


def test_parse_formats():
    assert parse_number(3) == QQi(3)
    assert parse_number({"num": 1, "den": 3}) == Q(1, 3)
    assert parse_number("2/5") == Q(2, 5)
    assert parse_number({"re": {"num": 1, "den": 2}, "im": -1}) == QQi(mpq(1, 2), -1)
    assert parse_number(0.5) == 0.5 + 0j
    assert isinstance(parse_number(0.5), complex)


def test_is_exact_and_as_scalar():
    assert is_exact(3) and is_exact(Q(1, 2)) and not is_exact(0.5)
    assert isinstance(as_scalar(Fraction(1, 2)), QQi)
    assert isinstance(as_scalar(1j), complex)
