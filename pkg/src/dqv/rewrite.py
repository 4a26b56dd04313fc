"""Normalisation of strand-algebra expressions modulo a set of relations.

The relations are toggled by flags:

* ``strict``      -- composite pairings split into sums of atomic ones,
                     and any generator touching the unit strand (label 0)
                     vanishes.
* ``symmetric``   -- the two sides of a pairing (and the outer sides of a
                     homotopy, and the two strands of a loop homotopy) can
                     be swapped.
* ``totally_symmetric`` -- additionally the inner pair of a homotopy is
                     unordered, and composite homotopies split into atomic
                     ones (requires strict to fire).
* ``coherent``    -- the three atomic homotopy classes on a strand triple
                     sum to zero; implies symmetric and strict.  The
                     induced rewrite fires only together with
                     totally_symmetric, which picks class representatives.
* ``unital``      -- the unit-strand kill on its own.
* ``disjoint_commute`` -- generators on disjoint strand sets commute
                     (restrict to pairing/pairing with ``disjoint_tt_only``).
* ``syl_exchange`` -- in a word, a loop homotopy and an atomic pairing may
                     trade places as the degree-(-1) marker: the ambient
                     2-term truncation identifies t_a w Syl_b with
                     Syl_a w t_b.

Normal forms are computed per word, expansion rules first, then a
canonical word order (lexicographically minimal element of the closure
under commutations and marker moves).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .algebra import (
    Expr,
    FTGen,
    Generator,
    ONE_EXPR,
    SylGen,
    TGen,
    Word,
    ZERO_EXPR,
    word_degree,
    word_key,
)
from .scalars import ONE, Scalar

UNIT_STRAND = 0


class FlagError(ValueError):
    """Raised when a requested reduction needs a relation that is off."""


@dataclass(frozen=True)
class RelationSet:
    strict: bool = False
    symmetric: bool = False
    totally_symmetric: bool = False
    coherent: bool = False
    unital: bool = False
    disjoint_commute: bool = True
    disjoint_tt_only: bool = False
    syl_exchange: bool = True

    # flag closure: total symmetry refines symmetry; coherency presumes a
    # symmetric strict setting
    @property
    def eff_symmetric(self) -> bool:
        return self.symmetric or self.totally_symmetric or self.coherent

    @property
    def eff_strict(self) -> bool:
        return self.strict or self.coherent

    @property
    def eff_unital(self) -> bool:
        return self.unital or self.eff_strict


ALL_ON = RelationSet(
    strict=True, symmetric=True, totally_symmetric=True, coherent=True, unital=True
)

_FLAG_NAMES = {
    "strict": "strict",
    "symmetric": "symmetric",
    "totally-symmetric": "totally_symmetric",
    "coherent": "coherent",
    "unital": "unital",
}


def flags_from_string(text: str) -> RelationSet:
    """Parse the comma-separated flag syntax used by the command line,
    e.g. "strict,symmetric,totally-symmetric,coherent,unital"."""
    kwargs = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        field = _FLAG_NAMES.get(part)
        if field is None:
            raise FlagError("unknown flag %r" % part)
        kwargs[field] = True
    return RelationSet(**kwargs)


def flags_to_string(rs: RelationSet) -> str:
    names = [cli for cli, field in _FLAG_NAMES.items() if getattr(rs, field)]
    return ",".join(names)


def _strip_unit(word: Word) -> Word | None:
    drop = lambda g: g - {UNIT_STRAND}
    out = []
    for gen in word:
        if UNIT_STRAND not in gen.labels:
            out.append(gen)
            continue
        if isinstance(gen, TGen):
            left, right = drop(gen.left), drop(gen.right)
            if not left or not right:
                return None
            out.append(TGen(left, right))
        elif isinstance(gen, FTGen):
            a, b = (drop(gen.outer[0]), drop(gen.outer[1]))
            p, q = (drop(gen.inner[0]), drop(gen.inner[1]))
            if not (a and b and p and q):
                return None
            out.append(FTGen((a, b), (p, q)))
        else:
            # loop homotopy on the unit strand is zero
            return None
    return tuple(out)


def _expand_t(gen: TGen) -> Expr:
    out: Dict[Word, Scalar] = {}
    for a in gen.left:
        for b in gen.right:
            out[(TGen(a, b),)] = ONE
    return Expr(out)


def expand_composite_ft(gen: FTGen) -> Expr:
    """Split a composite homotopy into atomic ones, one strand chosen from
    each inner group and from each group of the spectator side.  Spectator
    strands beyond the refined groups drop out entirely."""
    a, b = gen.outer
    p, q = gen.inner
    if gen.side == "left":
        others = b
    else:
        others = a
    out: Dict[Word, Scalar] = {}
    for x in sorted(p):
        for y in sorted(q):
            for z in sorted(others):
                if gen.side == "left":
                    atom = FTGen((frozenset({x, y}), frozenset({z})), ({x}, {y}))
                else:
                    atom = FTGen((frozenset({z}), frozenset({x, y})), ({x}, {y}))
                out[(atom,)] = out.get((atom,), Scalar()) + ONE
    return Expr(out)


def _canon_gen(gen: Generator, rs: RelationSet) -> Generator:
    if rs.eff_symmetric:
        if isinstance(gen, TGen):
            if min(gen.left) > min(gen.right):
                gen = gen.swapped()
        elif isinstance(gen, FTGen):
            if min(gen.outer[0]) > min(gen.outer[1]):
                gen = gen.outer_swapped()
        elif isinstance(gen, SylGen):
            if gen.pair[0] > gen.pair[1]:
                gen = gen.swapped()
    if rs.totally_symmetric and isinstance(gen, FTGen):
        if min(gen.inner[0]) > min(gen.inner[1]):
            gen = gen.inner_swapped()
    return gen


def _third_class_split(gen: FTGen) -> Expr | None:
    """For a canonicalised atomic homotopy, detect the third class on its
    strand triple and return its expansion minus first and second class."""
    if not gen.is_atomic() or gen.side != "left":
        return None
    (x,), (y,) = (tuple(gen.inner[0]), tuple(gen.inner[1]))
    (z,) = tuple(gen.outer[1])
    if not (x < z < y):
        return None
    first = FTGen((frozenset({x, z}), frozenset({y})), ({x}, {z}))
    second = FTGen((frozenset({x}), frozenset({z, y})), ({z}, {y}))
    return Expr({(first,): -ONE, (second,): -ONE})


def _commutable(g1: Generator, g2: Generator, rs: RelationSet) -> bool:
    if not rs.disjoint_commute:
        return False
    if g1.labels & g2.labels:
        return False
    if rs.disjoint_tt_only:
        return isinstance(g1, TGen) and isinstance(g2, TGen)
    return True


def _marker_moves(word: Word, rs: RelationSet) -> Iterable[Word]:
    """Trade the degree-(-1) marker between a loop homotopy and an atomic
    pairing anywhere in the word."""
    if not rs.syl_exchange:
        return
    syl_positions = [i for i, g in enumerate(word) if isinstance(g, SylGen)]
    t_positions = [
        i for i, g in enumerate(word) if isinstance(g, TGen) and g.is_atomic()
    ]
    for i in syl_positions:
        for j in t_positions:
            s: SylGen = word[i]
            t: TGen = word[j]
            new = list(word)
            new[i] = _canon_gen(TGen(s.pair[0], s.pair[1]), rs)
            (a,) = tuple(t.left)
            (b,) = tuple(t.right)
            new[j] = _canon_gen(SylGen(a, b), rs)
            yield tuple(new)


def _swap_moves(word: Word, rs: RelationSet) -> Iterable[Word]:
    for i in range(len(word) - 1):
        if _commutable(word[i], word[i + 1], rs):
            new = list(word)
            new[i], new[i + 1] = new[i + 1], new[i]
            yield tuple(new)


def _trace_min(word: Word, rs: RelationSet) -> Word:
    """Lexicographically minimal representative of the commutation class
    (greedy normal form; exact for pure commutations)."""
    remaining = list(word)
    out: List[Generator] = []
    while remaining:
        best = None
        for idx, gen in enumerate(remaining):
            if all(_commutable(prev, gen, rs) for prev in remaining[:idx]):
                if best is None or gen.sort_key() < remaining[best].sort_key():
                    best = idx
        out.append(remaining.pop(best))
    return tuple(out)


def _word_canonical_order(word: Word, rs: RelationSet) -> Word:
    if not any(isinstance(g, SylGen) for g in word) or not rs.syl_exchange:
        return _trace_min(word, rs)
    # marker moves interact with commutation, so take the minimum over the
    # full closure; words are short so this stays small
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for moved in itertools.chain(_swap_moves(w, rs), _marker_moves(w, rs)):
                if moved not in seen:
                    seen.add(moved)
                    nxt.append(moved)
        frontier = nxt
    return min(seen, key=word_key)


@lru_cache(maxsize=200000)
def _normalize_word(word: Word, rs: RelationSet) -> Expr:
    # unit-strand removal: drop label 0 from every group; a generator with
    # an empty group left over is zero
    if rs.eff_unital:
        for gen in word:
            if UNIT_STRAND in gen.labels:
                stripped = _strip_unit(word)
                if stripped is None:
                    return ZERO_EXPR
                return normalize(Expr({stripped: ONE}), rs)
    # composite pairing expansion
    if rs.eff_strict:
        for idx, gen in enumerate(word):
            if isinstance(gen, TGen) and not gen.is_atomic():
                head = Expr({word[:idx]: ONE})
                tail = Expr({word[idx + 1:]: ONE})
                return normalize(head * _expand_t(gen) * tail, rs)
    # composite homotopy expansion
    if rs.totally_symmetric and rs.eff_strict:
        for idx, gen in enumerate(word):
            if isinstance(gen, FTGen) and not gen.is_atomic():
                head = Expr({word[:idx]: ONE})
                tail = Expr({word[idx + 1:]: ONE})
                return normalize(head * expand_composite_ft(gen) * tail, rs)
    # per-generator canonical form
    canon = tuple(_canon_gen(g, rs) for g in word)
    # third-class elimination on strand triples
    if rs.coherent and rs.totally_symmetric:
        for idx, gen in enumerate(canon):
            if isinstance(gen, FTGen):
                split = _third_class_split(gen)
                if split is not None:
                    head = Expr({canon[:idx]: ONE})
                    tail = Expr({canon[idx + 1:]: ONE})
                    return normalize(head * split * tail, rs)
    # move the degree-(-1) marker off a homotopy onto an atomic pairing:
    # the ambient truncation identifies (d phi) w psi with phi w (d psi),
    # so a homotopy travelling with an atomic pairing is rewritten into
    # boundary words carrying a loop-homotopy marker instead.  The result
    # has no homotopy generator left, so this fires at most once per word.
    if rs.syl_exchange:
        f_idx = next(
            (i for i, g in enumerate(canon) if isinstance(g, FTGen)), None
        )
        t_idx = next(
            (
                i
                for i, g in enumerate(canon)
                if isinstance(g, TGen) and g.is_atomic()
            ),
            None,
        )
        if f_idx is not None and t_idx is not None:
            from .algebra import boundary_gen

            ft_gen = canon[f_idx]
            t_gen = canon[t_idx]
            (a,) = tuple(t_gen.left)
            (b,) = tuple(t_gen.right)
            marker = SylGen(a, b)
            total = ZERO_EXPR
            for dword, dcoeff in boundary_gen(ft_gen).terms.items():
                new = list(canon[:f_idx]) + list(dword) + list(canon[f_idx + 1:])
                pos = t_idx if t_idx < f_idx else t_idx + len(dword) - 1
                new[pos] = marker
                total = total + Expr({tuple(new): dcoeff})
            return normalize(total, rs)
    return Expr({_word_canonical_order(canon, rs): ONE})


def normalize(e: Expr, rs: RelationSet) -> Expr:
    out = ZERO_EXPR
    for word, coeff in e.terms.items():
        out = out + _normalize_word(word, rs) * coeff
    return out


def equivalent(a: Expr, b: Expr, rs: RelationSet) -> bool:
    return normalize(a - b, rs).is_zero()


def residual(a: Expr, b: Expr, rs: RelationSet) -> Expr:
    return normalize(a - b, rs)
