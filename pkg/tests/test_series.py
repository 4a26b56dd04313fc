from fractions import Fraction

import pytest

from dqv import series as sr
from dqv.algebra import ZERO_EXPR, comm, t
from dqv.rewrite import RelationSet, normalize
from dqv.scalars import I, PI, rational
from dqv.series import H, HBAR, Series, braiding_exp, exp_param, kz_phi, unit


def test_unit_is_multiplicative_identity():
    s = kz_phi(t(1, 2), t(2, 3))
    assert unit() * s == s
    assert s * unit() == s


def test_associator_inverse_pair():
    for conv in (H, HBAR):
        a, b = t(1, 2), t(2, 3)
        prod = kz_phi(a, b, conv) * kz_phi(b, a, conv)
        assert prod == unit()


def test_associator_order_cap():
    with pytest.raises(ValueError):
        kz_phi(t(1, 2), t(2, 3), H, order=4)


def test_exp_inverse_pair():
    s = rational(1, 2)
    e = exp_param(t(1, 2), s) * exp_param(t(1, 2), -1 * s)
    assert e == unit()


def test_braiding_exponent_conventions():
    b_h = braiding_exp(t(1, 2), H)
    b_hbar = braiding_exp(t(1, 2), HBAR)
    # parameter substitution turns one convention into the other
    assert sr.substitute_parameter(b_h) == b_hbar


def test_parameter_substitution_on_associator():
    a, b = t(1, 2), t(2, 3)
    assert sr.substitute_parameter(kz_phi(a, b, H)) == kz_phi(a, b, HBAR)


def test_parameter_substitution_multiplicative():
    x = kz_phi(t(1, 2), t(2, 3), H) * braiding_exp(t(1, 3), H)
    y = kz_phi(t(1, 2), t(2, 3), HBAR) * braiding_exp(t(1, 3), HBAR)
    assert sr.substitute_parameter(x) == y


def test_series_boundary_termwise():
    from dqv.algebra import left_homotopy, boundary

    s = sr.from_expr(left_homotopy(1, 2, 3), power=2)
    assert s.boundary().coeff(2) == boundary(left_homotopy(1, 2, 3))
    assert s.boundary().coeff(1) == ZERO_EXPR


def test_truncation_in_products():
    b = braiding_exp(t(1, 2), H)
    cube = b * b * b
    assert cube.order == sr.MAX_ORDER
    # order-3 coefficient exists and no higher coefficients leak
    assert set(cube.coeffs()) <= {0, 1, 2, 3}
