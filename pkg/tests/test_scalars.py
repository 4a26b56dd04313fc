from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dqv import scalars
from dqv.scalars import I, ONE, PI, ZERO, ZETA3, Scalar, rational


def test_rational_addition():
    assert rational(1, 2) + rational(1, 2) == ONE


def test_pi_squared_cancellation():
    x = rational(1, 6) * PI * PI
    assert (x - x).is_zero()


def test_zeta3_linearity():
    assert ZETA3 + 2 * ZETA3 == 3 * ZETA3


def test_i_squared_is_minus_one():
    assert I * I == -ONE
    assert I * I * I * I == ONE


def test_negative_pi_powers():
    inv = scalars.pi_power(-3)
    assert inv * scalars.pi_power(3) == ONE


def test_two_pi_i_square_times_associator_coeff():
    # (2 pi i)^2 * (1/24) = -pi^2/6
    got = scalars.two_pi_i_power(2) * rational(1, 24)
    assert got == rational(-1, 6) * PI * PI


def test_two_pi_i_cube_times_kz_third_order_coeff():
    # zeta(3)/(8 pi^3 i) = (-1/8) i pi^-3 zeta3 since 1/i = -i.
    # (2 pi i)^3 = -8 pi^3 i, so the product is -zeta3; the sign is absorbed
    # by flipping the nested commutator when changing parameter convention.
    coeff = rational(-1, 8) * I * scalars.pi_power(-3) * ZETA3
    assert scalars.two_pi_i_power(3) * coeff == -ZETA3


def test_string_rendering():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-ONE) == "-1"
    assert str(rational(1, 2) * I * PI) == "1/2*i*pi"
    assert str(scalars.pi_power(-3) * ZETA3) == "pi^-3*zeta3"


def test_negative_zeta3_exponent_rejected():
    with pytest.raises(ValueError):
        Scalar({(0, 0, -1): Fraction(1)})


def _scalars():
    mono = st.tuples(
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=-3, max_value=3),
        st.integers(min_value=0, max_value=2),
    )
    coeff = st.builds(
        Fraction,
        st.integers(min_value=-50, max_value=50),
        st.integers(min_value=1, max_value=12),
    )
    return st.dictionaries(mono, coeff, max_size=4).map(Scalar)


@settings(max_examples=400, deadline=None)
@given(_scalars(), _scalars(), _scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO
    assert a * ZERO == ZERO


@settings(max_examples=200, deadline=None)
@given(_scalars(), _scalars())
def test_hash_consistent_with_eq(a, b):
    if a == b:
        assert hash(a) == hash(b)
