"""Truncated formal deformation series with strand-algebra coefficients.

A series is a finite map {order: Expr} truncated at a fixed order (at most
3).  Two parameter conventions are supported and related by substituting
one deformation parameter for 2*pi*i times the other; the substitution
acts on an order-k coefficient by multiplication with (2*pi*i)^k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping

from .algebra import Expr, ONE_EXPR, ZERO_EXPR, boundary, comm, relabel
from .rewrite import RelationSet, normalize
from .scalars import (
    I,
    ONE,
    PI,
    Scalar,
    ZETA3,
    pi_power,
    rational,
    two_pi_i_power,
)

MAX_ORDER = 3

H = "h"          # convention with braiding exponent parameter/2
HBAR = "hbar"    # convention with braiding exponent pi*i*parameter

CONVENTIONS = (H, HBAR)


class Series:
    """Immutable truncated series; coefficients are expressions."""

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs: Mapping[int, Expr] | None = None, order: int = MAX_ORDER):
        if order < 0 or order > MAX_ORDER:
            raise ValueError("truncation order must be between 0 and %d" % MAX_ORDER)
        self.order = order
        clean: Dict[int, Expr] = {}
        for k, e in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative order")
            if k > order or e.is_zero():
                continue
            clean[k] = clean.get(k, ZERO_EXPR) + e
        self._coeffs = {k: e for k, e in clean.items() if not e.is_zero()}

    def coeff(self, k: int) -> Expr:
        return self._coeffs.get(k, ZERO_EXPR)

    def coeffs(self) -> Dict[int, Expr]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "Series") -> "Series":
        order = min(self.order, other.order)
        merged = dict(self._coeffs)
        for k, e in other._coeffs.items():
            merged[k] = merged.get(k, ZERO_EXPR) + e
        return Series(merged, order)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __neg__(self) -> "Series":
        return Series({k: -e for k, e in self._coeffs.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return Series({k: e * other for k, e in self._coeffs.items()}, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        out: Dict[int, Expr] = {}
        for k1, e1 in self._coeffs.items():
            for k2, e2 in other._coeffs.items():
                k = k1 + k2
                if k > order:
                    continue
                out[k] = out.get(k, ZERO_EXPR) + e1 * e2
        return Series(out, order)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self._coeffs.items())))

    def __repr__(self):
        if not self._coeffs:
            return "Series(0)"
        parts = ["O(%d): %r" % (k, e) for k, e in sorted(self._coeffs.items())]
        return "Series{" + "; ".join(parts) + "}"

    def boundary(self) -> "Series":
        return Series({k: boundary(e) for k, e in self._coeffs.items()}, self.order)

    def relabel(self, mapping) -> "Series":
        return Series(
            {k: relabel(e, mapping) for k, e in self._coeffs.items()}, self.order
        )

    def normalize(self, rs: RelationSet) -> "Series":
        return Series({k: normalize(e, rs) for k, e in self._coeffs.items()}, self.order)


def unit(order: int = MAX_ORDER) -> Series:
    return Series({0: ONE_EXPR}, order)


def from_expr(e: Expr, power: int = 0, order: int = MAX_ORDER) -> Series:
    return Series({power: e}, order)


def substitute_parameter(s: Series) -> Series:
    """Rewrite a series in the first convention into the second one by the
    parameter substitution; order k picks up (2*pi*i)^k."""
    return Series(
        {k: e * two_pi_i_power(k) for k, e in s.coeffs().items()}, s.order
    )


# third-order coefficient of the normalised associator series:
# zeta(3) / (8 pi^3 i) = -(1/8) i pi^-3 zeta3
_KZ3_H = rational(-1, 8) * I * pi_power(-3) * ZETA3
_KZ2_H = rational(1, 24)
_KZ2_HBAR = rational(-1, 6) * PI * PI
_KZ3_HBAR = ZETA3


def kz_phi(a: Expr, b: Expr, convention: str = H, order: int = MAX_ORDER) -> Series:
    """Normalised associator ansatz up to third order.

    The two conventions list the nested commutator in opposite order; the
    sign this produces is exactly the parameter substitution at order 3.
    """
    if order > MAX_ORDER:
        raise ValueError("associator series only known through order %d" % MAX_ORDER)
    if convention not in CONVENTIONS:
        raise ValueError("unknown convention %r" % convention)
    c = comm(a, b)
    coeffs: Dict[int, Expr] = {0: ONE_EXPR}
    if convention == H:
        coeffs[2] = c * _KZ2_H
        coeffs[3] = comm(a + b, c) * _KZ3_H
    else:
        coeffs[2] = c * _KZ2_HBAR
        coeffs[3] = comm(c, a + b) * _KZ3_HBAR
    return Series(coeffs, order)


def exp_param(x: Expr, scale: Scalar, order: int = MAX_ORDER) -> Series:
    """exp(scale * parameter * x) truncated."""
    coeffs: Dict[int, Expr] = {0: ONE_EXPR}
    power = ONE_EXPR
    scale_pow = ONE
    fact = Fraction(1)
    for k in range(1, order + 1):
        power = power * x
        scale_pow = scale_pow * scale
        fact *= k
        coeffs[k] = power * (scale_pow * Fraction(1, fact))
    return Series(coeffs, order)


def braiding_exp(x: Expr, convention: str = H, order: int = MAX_ORDER,
                 sign: int = 1) -> Series:
    """Braiding exponential: exp(p/2 x) or exp(pi i p x) depending on the
    convention, optionally with the parameter negated."""
    if convention == H:
        scale = rational(sign, 2)
    elif convention == HBAR:
        scale = rational(sign) * PI * I
    else:
        raise ValueError("unknown convention %r" % convention)
    return exp_param(x, scale, order)


def verify_modification(candidate: Series, defect: Series,
                        rs: RelationSet) -> Dict[int, Expr]:
    """Residuals, per order, of d(candidate) against the defect."""
    order = min(candidate.order, defect.order)
    out: Dict[int, Expr] = {}
    diff = candidate.boundary() - defect
    for k in range(order + 1):
        out[k] = normalize(diff.coeff(k), rs)
    return out


# ---------------------------------------------------------------------------
# named series constructions used by the identity catalogue
# ---------------------------------------------------------------------------

from .algebra import ft, left_homotopy, right_homotopy, syl, t  # noqa: E402


def pentagon_sides(convention: str = H, order: int = MAX_ORDER):
    """Both sides of the associator coherence pentagon on four strands."""
    lhs = (
        kz_phi(t(2, 3), t(3, 4), convention, order)
        * kz_phi(t(1, {2, 3}), t({2, 3}, 4), convention, order)
        * kz_phi(t(1, 2), t(2, 3), convention, order)
    )
    rhs = kz_phi(t(1, 2), t(2, {3, 4}), convention, order) * kz_phi(
        t({1, 2}, 3), t(3, 4), convention, order
    )
    return lhs, rhs


def prehex_sides(side: str, convention: str = H, order: int = MAX_ORDER):
    """Both sides of the braiding hexagon on three strands; ``side`` picks
    which of the two hexagons."""
    if side == "left":
        lhs = (
            kz_phi(t(2, 3), t(3, 1), convention, order)
            * braiding_exp(t(1, {2, 3}), convention, order)
            * kz_phi(t(1, 2), t(2, 3), convention, order)
        )
        rhs = (
            braiding_exp(t(1, 3), convention, order)
            * kz_phi(t(2, 1), t(1, 3), convention, order)
            * braiding_exp(t(1, 2), convention, order)
        )
    elif side == "right":
        lhs = (
            kz_phi(t(1, 2), t(3, 1), convention, order)
            * braiding_exp(t({1, 2}, 3), convention, order)
            * kz_phi(t(2, 3), t(1, 2), convention, order)
        )
        rhs = (
            braiding_exp(t(1, 3), convention, order)
            * kz_phi(t(3, 2), t(1, 3), convention, order)
            * braiding_exp(t(2, 3), convention, order)
        )
    else:
        raise ValueError("side must be 'left' or 'right'")
    return lhs, rhs


def hexagonator_candidate(side: str, convention: str = H, order: int = 2) -> Series:
    """Second-order homotopy bounding the hexagon defect."""
    L = left_homotopy(1, 2, 3)
    R = right_homotopy(1, 2, 3)
    base = (2 * L + R) if side == "left" else (L + 2 * R)
    s = Series({2: base * rational(1, 24)}, order)
    if convention == HBAR:
        s = substitute_parameter(s)
    elif convention != H:
        raise ValueError("unknown convention %r" % convention)
    return s


def prehex_right_candidate(order: int = MAX_ORDER) -> Series:
    """Right hexagon homotopy through third order (second convention)."""
    L = left_homotopy(1, 2, 3)
    R = right_homotopy(1, 2, 3)
    t12, t23 = t(1, 2), t(2, 3)
    t12_3 = t({1, 2}, 3)
    t1_23 = t(1, {2, 3})
    c2 = rational(-1, 6) * PI * PI * (L + 2 * R)
    c3 = ZETA3 * (comm(t12_3 - 2 * t12, R) + comm(2 * t23 - t1_23, L)) - rational(
        1, 6
    ) * PI * PI * PI * I * ((L + R) * t12_3 + t12_3 * R)
    return Series({2: c2, 3: c3}, order)


def pentagonator_candidate(order: int = MAX_ORDER) -> Series:
    """Third-order homotopy bounding the pentagon defect (second
    convention); lower orders vanish."""
    L123 = left_homotopy(1, 2, 3)
    R123 = right_homotopy(1, 2, 3)
    L234 = left_homotopy(2, 3, 4)
    R234 = right_homotopy(2, 3, 4)
    c3 = ZETA3 * (
        comm(t(3, 4) - t(2, 4), L123)
        - comm(3 * t(2, 4) + t(3, 4), R123)
        + comm(t(1, 2) + 3 * t(1, 3), L234)
        + comm(t(1, 3) - t(1, 2), R234)
    )
    return Series({3: c3}, order)


def loop_cascade(loops: Expr, pairing: Expr, order: int = MAX_ORDER) -> Series:
    """Odd exponential-type series on a loop homotopy: the order-1 term is
    2*pi*i times the loop, the order-3 term is -(pi^3 i/3) pairing^2 loop."""
    c1 = loops * (2 * PI * I)
    s = Series({1: c1}, order)
    if order >= 3:
        c3 = -(pairing * pairing * loops) * (rational(1, 3) * PI * PI * PI * I)
        s = s + Series({3: c3}, order)
    return s


def syllepsis_factorisation(side: str, order: int = MAX_ORDER):
    """Both sides of the loop-homotopy factorisation of the hexagon
    homotopy (second convention)."""
    cand = prehex_right_candidate(order)
    phi = lambda a, b: kz_phi(a, b, HBAR, order)
    em = lambda x: braiding_exp(x, HBAR, order, sign=-1)
    ep = lambda x: braiding_exp(x, HBAR, order, sign=1)
    t12, t13, t23 = t(1, 2), t(1, 3), t(2, 3)
    t12_3 = t({1, 2}, 3)
    t1_23 = t(1, {2, 3})
    g12 = loop_cascade(syl(1, 2), t12, order)
    g13 = loop_cascade(syl(1, 3), t13, order)
    g23 = loop_cascade(syl(2, 3), t23, order)
    if side == "right":
        lhs = cand
        g_12_3 = loop_cascade(syl(1, 3) + syl(2, 3), t12_3, order)
        rhs = (
            phi(t12, t13) * g_12_3 * phi(t23, t12)
            - phi(t12, t13)
            * em(t12_3)
            * phi(t23, t12)
            * cand.relabel({1: 2, 2: 1, 3: 3})
            * em(t13)
            * phi(t23, t13)
            * em(t23)
            - em(t13) * phi(t23, t13) * g23
            - g13 * phi(t23, t13) * ep(t23)
        )
    elif side == "left":
        lhs = cand.relabel({1: 3, 2: 2, 3: 1})
        g_1_23 = loop_cascade(syl(1, 2) + syl(1, 3), t1_23, order)
        rhs = (
            phi(t23, t13) * g_1_23 * phi(t12, t23)
            - phi(t23, t13)
            * em(t1_23)
            * phi(t12, t23)
            * cand.relabel({1: 2, 2: 3, 3: 1})
            * em(t13)
            * phi(t12, t13)
            * em(t12)
            - em(t13) * phi(t12, t13) * g12
            - g13 * phi(t12, t13) * ep(t12)
        )
    else:
        raise ValueError("side must be 'left' or 'right'")
    return lhs, rhs
