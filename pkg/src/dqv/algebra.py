"""Free graded algebra on strand-indexed generators in degrees 0 and -1.

Three kinds of generators act on labelled strands:

* degree-0 pairings ``t(A, B)`` between two disjoint strand groups,
* degree-(-1) homotopies ``ft((A, B), (P, Q))`` whose inner pair of groups
  (P, Q) refines one side of the outer pair (both inner groups on the same
  outer side; anything else is a construction error),
* degree-(-1) loop homotopies ``syl(i, j)`` on a pair of strands.

Words are tuples of generators.  The ambient coefficient complex is
2-term truncated, so any product containing two or more degree-(-1)
factors is identically zero; multiplication drops such words.

Expressions are finite Scalar-linear combinations of words.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple

from .scalars import ONE, Scalar

Label = int


def _group(value) -> frozenset:
    if isinstance(value, int):
        return frozenset((value,))
    g = frozenset(value)
    if not g:
        raise ValueError("empty strand group")
    if not all(isinstance(x, int) for x in g):
        raise TypeError("strand labels must be ints")
    return g


class Generator:
    """Base class; concrete generators are immutable and hashable."""

    __slots__ = ()
    degree = 0
    kind_rank = 0

    @property
    def labels(self) -> frozenset:
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    def relabel(self, mapping: Mapping[Label, Label]) -> "Generator":
        raise NotImplementedError


class TGen(Generator):
    """Degree-0 pairing between two disjoint strand groups."""

    __slots__ = ("left", "right")
    degree = 0
    kind_rank = 0

    def __init__(self, left, right):
        left, right = _group(left), _group(right)
        if left & right:
            raise ValueError("pairing groups must be disjoint")
        self.left = left
        self.right = right

    @property
    def labels(self) -> frozenset:
        return self.left | self.right

    def is_atomic(self) -> bool:
        return len(self.left) == 1 and len(self.right) == 1

    def sort_key(self):
        return (self.kind_rank, tuple(sorted(self.left)), tuple(sorted(self.right)))

    def relabel(self, mapping):
        return TGen({mapping[x] for x in self.left}, {mapping[x] for x in self.right})

    def swapped(self) -> "TGen":
        return TGen(self.right, self.left)

    def __eq__(self, other):
        return (
            isinstance(other, TGen)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash(("t", self.left, self.right))

    def __repr__(self):
        return "t[%s,%s]" % (_group_str(self.left), _group_str(self.right))


class FTGen(Generator):
    """Degree-(-1) homotopy refining one side of a pairing.

    outer = (A, B), inner = (P, Q) with P, Q disjoint groups and
    P | Q contained in A (side "left") or in B (side "right").
    The inner pair is ordered.
    """

    __slots__ = ("outer", "inner", "side")
    degree = -1
    kind_rank = 1

    def __init__(self, outer, inner):
        a, b = (_group(outer[0]), _group(outer[1]))
        p, q = (_group(inner[0]), _group(inner[1]))
        if a & b:
            raise ValueError("outer groups must be disjoint")
        if p & q:
            raise ValueError("inner groups must be disjoint")
        refined = p | q
        if refined <= a:
            side = "left"
        elif refined <= b:
            side = "right"
        else:
            raise ValueError("inner groups must refine a single outer side")
        self.outer = (a, b)
        self.inner = (p, q)
        self.side = side

    @property
    def labels(self) -> frozenset:
        return self.outer[0] | self.outer[1]

    def is_atomic(self) -> bool:
        return (
            len(self.inner[0]) == 1
            and len(self.inner[1]) == 1
            and len(self.labels) == 3
            and len(self.outer[0]) + len(self.outer[1]) == 3
        )

    def sort_key(self):
        return (
            self.kind_rank,
            tuple(sorted(self.outer[0])),
            tuple(sorted(self.outer[1])),
            tuple(sorted(self.inner[0])),
            tuple(sorted(self.inner[1])),
        )

    def relabel(self, mapping):
        f = lambda g: {mapping[x] for x in g}
        return FTGen(
            (f(self.outer[0]), f(self.outer[1])),
            (f(self.inner[0]), f(self.inner[1])),
        )

    def outer_swapped(self) -> "FTGen":
        return FTGen((self.outer[1], self.outer[0]), self.inner)

    def inner_swapped(self) -> "FTGen":
        return FTGen(self.outer, (self.inner[1], self.inner[0]))

    def __eq__(self, other):
        return (
            isinstance(other, FTGen)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash(("ft", self.outer, self.inner))

    def __repr__(self):
        return "ft[(%s,%s);(%s,%s)]" % (
            _group_str(self.outer[0]),
            _group_str(self.outer[1]),
            _group_str(self.inner[0]),
            _group_str(self.inner[1]),
        )


class SylGen(Generator):
    """Degree-(-1) loop homotopy on an ordered pair of strands."""

    __slots__ = ("pair",)
    degree = -1
    kind_rank = 2

    def __init__(self, i: Label, j: Label):
        if not (isinstance(i, int) and isinstance(j, int)):
            raise TypeError("strand labels must be ints")
        if i == j:
            raise ValueError("loop homotopy needs two distinct strands")
        self.pair = (i, j)

    @property
    def labels(self) -> frozenset:
        return frozenset(self.pair)

    def sort_key(self):
        return (self.kind_rank, self.pair)

    def relabel(self, mapping):
        return SylGen(mapping[self.pair[0]], mapping[self.pair[1]])

    def swapped(self) -> "SylGen":
        return SylGen(self.pair[1], self.pair[0])

    def __eq__(self, other):
        return isinstance(other, SylGen) and self.pair == other.pair

    def __hash__(self):
        return hash(("syl", self.pair))

    def __repr__(self):
        return "Syl[%d,%d]" % self.pair


def _group_str(g: frozenset) -> str:
    items = sorted(g)
    if len(items) == 1:
        return str(items[0])
    return "(" + ",".join(map(str, items)) + ")"


Word = Tuple[Generator, ...]


def word_degree(word: Word) -> int:
    return sum(g.degree for g in word)


def word_key(word: Word):
    return tuple(g.sort_key() for g in word)


class Expr:
    """Scalar-linear combination of words; immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Scalar] | None = None):
        clean: Dict[Word, Scalar] = {}
        for word, coeff in (terms or {}).items():
            if coeff.is_zero():
                continue
            if word_degree(word) <= -2:
                continue
            clean[word] = clean.get(word, Scalar()) + coeff
        self._terms = {w: c for w, c in clean.items() if not c.is_zero()}
        self._hash = None

    @property
    def terms(self) -> Dict[Word, Scalar]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set:
        return {word_degree(w) for w in self._terms}

    def labels(self) -> frozenset:
        out = frozenset()
        for w in self._terms:
            for g in w:
                out |= g.labels
        return out

    def __add__(self, other):
        if not isinstance(other, Expr):
            return NotImplemented
        merged = dict(self._terms)
        for w, c in other._terms.items():
            merged[w] = merged.get(w, Scalar()) + c
        return Expr(merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Expr({w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if isinstance(other, Scalar):
            return Expr({w: c * other for w, c in self._terms.items()})
        if not isinstance(other, Expr):
            return NotImplemented
        out: Dict[Word, Scalar] = {}
        for w1, c1 in self._terms.items():
            d1 = word_degree(w1)
            for w2, c2 in other._terms.items():
                if d1 + word_degree(w2) <= -2:
                    continue
                w = w1 + w2
                c = c1 * c2
                out[w] = out.get(w, Scalar()) + c
        return Expr(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * Scalar.from_rational(other)
        if isinstance(other, Scalar):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Expr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms, key=word_key):
            c = self._terms[w]
            word_text = "*".join(repr(g) for g in w) if w else "1"
            parts.append("(%s)*%s" % (c, word_text))
        return " + ".join(parts)


ZERO_EXPR = Expr()
ONE_EXPR = Expr({(): ONE})


def from_gen(gen: Generator) -> Expr:
    return Expr({(gen,): ONE})


def t(a, b) -> Expr:
    return from_gen(TGen(a, b))


def ft(outer, inner) -> Expr:
    return from_gen(FTGen(outer, inner))


def left_homotopy(i, j, k) -> Expr:
    """Homotopy with outer ({i, j}, {k}) and ordered inner ({i}, {j})."""
    return ft((_group(i) | _group(j), k), (i, j))


def right_homotopy(i, j, k) -> Expr:
    """Homotopy with outer ({i}, {j, k}) and ordered inner ({j}, {k})."""
    return ft((i, _group(j) | _group(k)), (j, k))


def syl(i: Label, j: Label) -> Expr:
    return from_gen(SylGen(i, j))


def comm(a: Expr, b: Expr) -> Expr:
    return a * b - b * a


def boundary_gen(gen: Generator) -> Expr:
    """Differential of a single generator."""
    if isinstance(gen, TGen):
        return ZERO_EXPR
    if isinstance(gen, FTGen):
        inner_t = TGen(gen.inner[0], gen.inner[1])
        outer_t = TGen(gen.outer[0], gen.outer[1])
        return Expr(
            {
                (inner_t, outer_t): ONE,
                (outer_t, inner_t): -ONE,
            }
        )
    if isinstance(gen, SylGen):
        return from_gen(TGen(gen.pair[0], gen.pair[1]))
    raise TypeError(gen)


def boundary(e: Expr) -> Expr:
    """Leibniz differential.  Only degree-(-1) words contribute; the unique
    degree-(-1) factor is replaced by its differential, all other factors
    have degree 0 so no Koszul signs arise."""
    out = ZERO_EXPR
    for word, coeff in e.terms.items():
        if word_degree(word) != -1:
            continue
        for idx, gen in enumerate(word):
            if gen.degree != -1:
                continue
            head = Expr({word[:idx]: coeff})
            tail = Expr({word[idx + 1:]: ONE})
            out = out + head * boundary_gen(gen) * tail
            break
    return out


def relabel(e: Expr, mapping: Mapping[Label, Label]) -> Expr:
    """Push every strand label through the (injective) mapping."""
    out: Dict[Word, Scalar] = {}
    for word, coeff in e.terms.items():
        new_word = tuple(g.relabel(mapping) for g in word)
        out[new_word] = out.get(new_word, Scalar()) + coeff
    return Expr(out)
