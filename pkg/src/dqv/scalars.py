"""Exact scalar arithmetic over Q(i) adjoined pi and zeta3.

A scalar is a finite Q-linear combination of monomials i^a * pi^b * zeta3^c
with a in {0, 1}, b any integer (negative powers of pi occur in the
normalised associator coefficients) and c >= 0.  i^2 reduces to -1, so the
exponent of i is stored mod 4 folded into the sign of the coefficient.

No floats anywhere.  Scalars are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple

# (i_exp, pi_exp, zeta3_exp)
Monomial = Tuple[int, int, int]

_MONO_ONE: Monomial = (0, 0, 0)


def _mul_mono(m1: Monomial, m2: Monomial) -> Tuple[Monomial, int]:
    """Multiply two monomials; return (monomial, sign) after i^2 -> -1."""
    i_exp = m1[0] + m2[0]
    sign = 1
    if i_exp >= 2:
        i_exp -= 2
        sign = -1
    return (i_exp, m1[1] + m2[1], m1[2] + m2[2]), sign


class Scalar:
    """Immutable element of Q(i)[pi, pi^-1, zeta3]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                i_exp, pi_exp, z_exp = mono
                if z_exp < 0:
                    raise ValueError("negative zeta3 exponent: %r" % (mono,))
                # fold i^k, k >= 2, into the coefficient sign
                i_exp %= 4
                if i_exp >= 2:
                    i_exp -= 2
                    coeff = -coeff
                key = (i_exp, pi_exp, z_exp)
                clean[key] = clean.get(key, Fraction(0)) + coeff
        self._terms = {m: c for m, c in clean.items() if c != 0}
        self._hash = None

    @classmethod
    def from_rational(cls, value) -> "Scalar":
        return cls({_MONO_ONE: Fraction(value)})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(m == _MONO_ONE for m in self._terms)

    def rational_value(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError("not a rational scalar: %s" % self)
        return self._terms[_MONO_ONE]

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + coeff
        return Scalar(merged)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return Scalar({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Scalar):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono, sign = _mul_mono(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + sign * c1 * c2
        return Scalar(out)

    def __rmul__(self, other) -> "Scalar":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            raise ValueError("negative powers not supported on Scalar")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return "Scalar(%s)" % str(self)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms):
            coeff = self._terms[mono]
            factors = []
            i_exp, pi_exp, z_exp = mono
            if i_exp:
                factors.append("i")
            if pi_exp:
                factors.append("pi" if pi_exp == 1 else "pi^%d" % pi_exp)
            if z_exp:
                factors.append("zeta3" if z_exp == 1 else "zeta3^%d" % z_exp)
            if not factors:
                text = str(coeff)
            elif coeff == 1:
                text = "*".join(factors)
            elif coeff == -1:
                text = "-" + "*".join(factors)
            else:
                text = str(coeff) + "*" + "*".join(factors)
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


ZERO = Scalar()
ONE = Scalar.from_rational(1)
I = Scalar({(1, 0, 0): Fraction(1)})
PI = Scalar({(0, 1, 0): Fraction(1)})
ZETA3 = Scalar({(0, 0, 1): Fraction(1)})


def rational(p, q: int = 1) -> Scalar:
    return Scalar.from_rational(Fraction(p, q))


def pi_power(k: int) -> Scalar:
    return Scalar({(0, k, 0): Fraction(1)})


def two_pi_i_power(k: int) -> Scalar:
    """(2*pi*i)^k for k >= 0, with i^k reduced."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    i_exp = k % 4
    coeff = Fraction(2) ** k
    if i_exp >= 2:
        i_exp -= 2
        coeff = -coeff
    return Scalar({(i_exp, k, 0): coeff})
