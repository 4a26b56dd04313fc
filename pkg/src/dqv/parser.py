"""Expression grammar for the command line and the service.

Generators are written ``t[1,2]`` / ``t[(1,2),3]`` for pairings,
``L[1,2,3]`` and ``R[1,2,3]`` for the two homotopy families (group slots
allowed), ``Syl[1,2]`` for loop homotopies, and a general
``ft[(A;B);(P,Q)]`` escape hatch matching the algebra's own rendering.
Scalars are rationals ``1/24`` and the constants ``i``, ``pi``,
``zeta3``; the deformation parameter is ``h`` or ``hbar``; ``^`` takes
integer exponents and binds tighter than ``*``, which binds tighter than
``+``/``-``.  ``comm(a,b)`` is the commutator and ``d(a)`` the boundary.

Parsing produces a truncated series together with the parameter name it
uses (None for parameter-free input); printing inverts it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import Expr, FTGen, Generator, SylGen, TGen
from .scalars import I, ONE, PI, Scalar, ZETA3, rational
from .series import H, HBAR, MAX_ORDER, Series, from_expr, unit


class ParseError(ValueError):
    pass


@dataclass
class Parsed:
    series: Series
    parameter: Optional[str]   # "h", "hbar", or None


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^(),;\[\]]))"
)


def _tokenize(text: str) -> List[Tuple[str, str]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError("bad character at %r" % text[pos:pos + 10])
            break
        pos = m.end()
        if m.group("num"):
            out.append(("num", m.group("num")))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


class _Parser:
    def __init__(self, tokens: List[Tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> Tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input")
        self.pos += 1
        return tok

    def expect(self, value: str):
        tok = self.next()
        if tok[1] != value:
            raise ParseError("expected %r, got %r" % (value, tok[1]))

    # ---- values carry (series, parameter) ----

    def parse(self) -> Parsed:
        series, param = self.expr()
        if self.peek() is not None:
            raise ParseError("trailing input at %r" % (self.peek()[1],))
        return Parsed(series, param)

    def expr(self):
        series, param = self.term()
        while self.peek() and self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rs, rp = self.term()
            param = _join_param(param, rp)
            series = series + rs if op == "+" else series - rs
        return series, param

    def term(self):
        series, param = self.factor()
        while self.peek() and self.peek()[1] == "*":
            self.next()
            rs, rp = self.factor()
            param = _join_param(param, rp)
            series = series * rs
        return series, param

    def factor(self):
        if self.peek() and self.peek()[1] == "-":
            self.next()
            series, param = self.factor()
            return -series, param
        series, param = self.atom()
        while self.peek() and self.peek()[1] == "^":
            self.next()
            k = self._signed_int()
            series = _power(series, k)
        return series, param

    def _signed_int(self) -> int:
        sign = 1
        if self.peek() and self.peek()[1] == "-":
            self.next()
            sign = -1
        tok = self.next()
        if tok[0] != "num":
            raise ParseError("expected integer exponent, got %r" % (tok[1],))
        return sign * int(tok[1])

    def atom(self):
        tok = self.next()
        kind, val = tok
        if kind == "num":
            num = int(val)
            if self.peek() and self.peek()[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "num":
                    raise ParseError("expected denominator")
                return _scalar(rational(num, int(den[1]))), None
            return _scalar(rational(num)), None
        if kind == "op" and val == "(":
            series, param = self.expr()
            self.expect(")")
            return series, param
        if kind == "name":
            if val == "pi":
                return _scalar(PI), None
            if val == "i":
                return _scalar(I), None
            if val == "zeta3":
                return _scalar(ZETA3), None
            if val in (H, HBAR):
                return from_expr(Expr({(): ONE}), power=1), val
            if val == "comm":
                self.expect("(")
                a, pa = self.expr()
                self.expect(",")
                b, pb = self.expr()
                self.expect(")")
                return a * b - b * a, _join_param(pa, pb)
            if val == "d":
                self.expect("(")
                a, pa = self.expr()
                self.expect(")")
                return a.boundary(), pa
            if val in ("t", "L", "R", "Syl", "ft"):
                try:
                    gen = self._generator(val)
                except ValueError as exc:
                    raise ParseError(str(exc)) from exc
                return from_expr(Expr({(gen,): ONE})), None
        raise ParseError("unexpected token %r" % (val,))

    # ---- generator literals ----

    def _group(self) -> frozenset:
        tok = self.next()
        if tok[1] == "(":
            labels = [self._label()]
            while self.peek() and self.peek()[1] == ",":
                self.next()
                labels.append(self._label())
            self.expect(")")
            return frozenset(labels)
        if tok[0] == "num":
            return frozenset({int(tok[1])})
        raise ParseError("expected strand or group, got %r" % (tok[1],))

    def _label(self) -> int:
        tok = self.next()
        if tok[0] != "num":
            raise ParseError("expected strand label")
        return int(tok[1])

    def _generator(self, head: str) -> Generator:
        self.expect("[")
        if head == "t":
            left = self._group()
            self.expect(",")
            right = self._group()
            self.expect("]")
            return TGen(left, right)
        if head == "Syl":
            a = self._label()
            self.expect(",")
            b = self._label()
            self.expect("]")
            return SylGen(a, b)
        if head == "ft":
            self.expect("(")
            a = self._group()
            self.expect(",")
            b = self._group()
            self.expect(")")
            self.expect(";")
            self.expect("(")
            p = self._group()
            self.expect(",")
            q = self._group()
            self.expect(")")
            self.expect("]")
            return FTGen((a, b), (p, q))
        g1 = self._group()
        self.expect(",")
        g2 = self._group()
        self.expect(",")
        g3 = self._group()
        self.expect("]")
        if head == "L":
            return FTGen((g1 | g2, g3), (g1, g2))
        return FTGen((g1, g2 | g3), (g2, g3))


def _scalar(s: Scalar):
    return from_expr(Expr({(): s}))


def _power(series: Series, k: int) -> Series:
    if k < 0:
        return _scalar(_invert_scalar(_as_scalar(series)) ** (-k))
    out = unit()
    for _ in range(k):
        out = out * series
    return out


def _as_scalar(series: Series) -> Scalar:
    coeffs = {o: e for o, e in series.coeffs().items() if not e.is_zero()}
    if set(coeffs) not in ({0}, set()):
        raise ParseError("negative powers apply to scalars only")
    e = coeffs.get(0)
    if e is None or set(e.terms) != {()}:
        raise ParseError("negative powers apply to scalars only")
    return e.terms[()]


def _invert_scalar(s: Scalar) -> Scalar:
    terms = dict(s.terms)
    if len(terms) != 1:
        raise ParseError("cannot invert a sum of monomials")
    (mono, coeff), = terms.items()
    i_exp, pi_exp, z_exp = mono
    if z_exp or coeff == 0:
        raise ParseError("monomial is not invertible here")
    sign = Fraction(-1) if i_exp else Fraction(1)
    return Scalar({(i_exp, -pi_exp, 0): sign / coeff})


def _join_param(a: Optional[str], b: Optional[str]) -> Optional[str]:
    if a is None:
        return b
    if b is None or a == b:
        return a
    raise ParseError("cannot mix the h and hbar parameters")


def parse(text: str) -> Parsed:
    return _Parser(_tokenize(text)).parse()


# --------------------------------------------------------------------------
# printing
# --------------------------------------------------------------------------


def _print_group(g: frozenset) -> str:
    labels = sorted(g)
    if len(labels) == 1:
        return str(labels[0])
    return "(%s)" % ",".join(str(x) for x in labels)


def print_generator(gen: Generator) -> str:
    if isinstance(gen, TGen):
        return "t[%s,%s]" % (_print_group(gen.left), _print_group(gen.right))
    if isinstance(gen, SylGen):
        return "Syl[%d,%d]" % gen.pair
    a, b = gen.outer
    p, q = gen.inner
    if gen.side == "left" and a == p | q:
        return "L[%s,%s,%s]" % (
            _print_group(p), _print_group(q), _print_group(b)
        )
    if gen.side == "right" and b == p | q:
        return "R[%s,%s,%s]" % (
            _print_group(a), _print_group(p), _print_group(q)
        )
    return "ft[(%s,%s);(%s,%s)]" % (
        _print_group(a), _print_group(b), _print_group(p), _print_group(q)
    )


def _print_scalar(s: Scalar) -> str:
    text = str(s)
    if "+" in text[1:] or "-" in text[1:] or "*" in text or "^" in text:
        return "(%s)" % text
    return text


def print_word_term(word, coeff: Scalar) -> str:
    factors = [print_generator(g) for g in word]
    if not factors:
        return _print_scalar(coeff)
    if coeff == ONE:
        return "*".join(factors)
    return _print_scalar(coeff) + "*" + "*".join(factors)


def print_expr(e: Expr) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for word in sorted(e.terms, key=_word_sort_key):
        parts.append(print_word_term(word, e.terms[word]))
    out = parts[0]
    for p in parts[1:]:
        out += " + " + p if not p.startswith("-") else " " + p[:1] + " " + p[1:]
    return out


def _word_sort_key(word):
    return (len(word), tuple(g.sort_key() for g in word))


def print_parsed(value: Parsed) -> str:
    series = value.series
    if series.is_zero():
        return "0"
    parts = []
    for k in sorted(series.coeffs()):
        e = series.coeff(k)
        if e.is_zero():
            continue
        body = print_expr(e)
        if k == 0:
            parts.append(body)
        else:
            suffix = value.parameter or H
            if k > 1:
                suffix += "^%d" % k
            if body == "0":
                continue
            parts.append("(%s)*%s" % (body, suffix))
    return " + ".join(parts) if parts else "0"
