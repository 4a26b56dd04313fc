"""Independent closure oracle for the rewrite engine.

The engine decides equality through canonical normal forms.  This module
re-derives equality a second way: starting from a single word, apply every
ground relation move one step at a time and collect the closure of
reachable expressions.  Two words are equal exactly when their closures
meet.  The moves are written out from the relations directly and share no
normalisation logic with the engine, so agreement between the two is a
real check.

Directed moves (expansions, unit stripping, marker transfer, third-class
elimination) terminate, so closures are finite; a node cap still guards
against blowups and a capped search reports ``None`` rather than
guessing.
"""

from __future__ import annotations

import random
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .algebra import (
    Expr,
    FTGen,
    Generator,
    SylGen,
    TGen,
    Word,
    boundary_gen,
    ft,
    syl,
    t,
)
from .rewrite import UNIT_STRAND, RelationSet
from .scalars import ONE, Scalar

State = FrozenSet[Tuple[Word, Scalar]]


def _state(e: Expr) -> State:
    return frozenset(e.terms.items())


def _splice(word: Word, idx: int, repl: Expr) -> Expr:
    head = Expr({word[:idx]: ONE})
    tail = Expr({word[idx + 1:]: ONE})
    return head * repl * tail


def _gen_word_moves(word: Word, rs: RelationSet) -> Iterable[Expr]:
    """All single-step rewrites of one word, each an instance of one
    relation in ``rs``."""
    for idx, gen in enumerate(word):
        # unit strand removal
        if rs.eff_unital and UNIT_STRAND in gen.labels:
            if isinstance(gen, TGen):
                left = gen.left - {UNIT_STRAND}
                right = gen.right - {UNIT_STRAND}
                if left and right:
                    yield _splice(word, idx, Expr({(TGen(left, right),): ONE}))
                else:
                    yield Expr({})
            elif isinstance(gen, FTGen):
                groups = [g - {UNIT_STRAND} for g in gen.outer + gen.inner]
                if all(groups):
                    stripped = FTGen((groups[0], groups[1]),
                                     (groups[2], groups[3]))
                    yield _splice(word, idx, Expr({(stripped,): ONE}))
                else:
                    yield Expr({})
            else:
                yield Expr({})
            continue
        # additivity of composite pairings
        if rs.eff_strict and isinstance(gen, TGen) and not gen.is_atomic():
            total = Expr({})
            for a in gen.left:
                for b in gen.right:
                    total = total + Expr({(TGen(frozenset({a}),
                                                frozenset({b})),): ONE})
            yield _splice(word, idx, total)
        # additivity of composite homotopies
        if (
            rs.totally_symmetric
            and rs.eff_strict
            and isinstance(gen, FTGen)
            and not gen.is_atomic()
        ):
            spectator = gen.outer[1] if gen.side == "left" else gen.outer[0]
            total = Expr({})
            for x in gen.inner[0]:
                for y in gen.inner[1]:
                    for z in spectator:
                        if gen.side == "left":
                            atom = FTGen(
                                (frozenset({x, y}), frozenset({z})),
                                (frozenset({x}), frozenset({y})),
                            )
                        else:
                            atom = FTGen(
                                (frozenset({z}), frozenset({x, y})),
                                (frozenset({x}), frozenset({y})),
                            )
                        total = total + Expr({(atom,): ONE})
            yield _splice(word, idx, total)
        # side swaps, applied only toward the sorted variant: swaps touch
        # one generator at a time and never interact, so the closure still
        # contains every joint canonical form
        if rs.eff_symmetric:
            if isinstance(gen, TGen) and min(gen.left) > min(gen.right):
                yield _splice(word, idx, Expr({(gen.swapped(),): ONE}))
            elif isinstance(gen, FTGen) and min(gen.outer[0]) > min(gen.outer[1]):
                yield _splice(word, idx, Expr({(gen.outer_swapped(),): ONE}))
            elif isinstance(gen, SylGen) and gen.pair[0] > gen.pair[1]:
                yield _splice(word, idx, Expr({(gen.swapped(),): ONE}))
        if (
            rs.totally_symmetric
            and isinstance(gen, FTGen)
            and min(gen.inner[0]) > min(gen.inner[1])
        ):
            yield _splice(word, idx, Expr({(gen.inner_swapped(),): ONE}))
        # third class on a strand triple rewritten through the other two
        if (
            rs.coherent
            and rs.totally_symmetric
            and isinstance(gen, FTGen)
            and gen.is_atomic()
            and gen.side == "left"
        ):
            (x,) = tuple(gen.inner[0])
            (y,) = tuple(gen.inner[1])
            (z,) = tuple(gen.outer[1])
            if x < z < y:
                first = FTGen((frozenset({x, z}), frozenset({y})),
                              (frozenset({x}), frozenset({z})))
                second = FTGen((frozenset({x}), frozenset({z, y})),
                               (frozenset({z}), frozenset({y})))
                yield _splice(word, idx,
                              Expr({(first,): -ONE, (second,): -ONE}))
    # adjacent disjoint commutation
    if rs.disjoint_commute:
        for i in range(len(word) - 1):
            g1, g2 = word[i], word[i + 1]
            if g1.labels & g2.labels:
                continue
            if rs.disjoint_tt_only and not (
                isinstance(g1, TGen) and isinstance(g2, TGen)
            ):
                continue
            swapped = word[:i] + (g2, g1) + word[i + 2:]
            yield Expr({swapped: ONE})
    if rs.syl_exchange:
        # marker trade between a loop homotopy and an atomic pairing
        for i, gi in enumerate(word):
            if not isinstance(gi, SylGen):
                continue
            for j, gj in enumerate(word):
                if not (isinstance(gj, TGen) and gj.is_atomic()):
                    continue
                new = list(word)
                new[i] = TGen(frozenset({gi.pair[0]}), frozenset({gi.pair[1]}))
                (a,) = tuple(gj.left)
                (b,) = tuple(gj.right)
                new[j] = SylGen(a, b)
                yield Expr({tuple(new): ONE})
        # a homotopy next to an atomic pairing hands its marker over and
        # becomes its boundary
        for i, gi in enumerate(word):
            if not isinstance(gi, FTGen):
                continue
            for j, gj in enumerate(word):
                if not (isinstance(gj, TGen) and gj.is_atomic()):
                    continue
                (a,) = tuple(gj.left)
                (b,) = tuple(gj.right)
                total = Expr({})
                for dword, dcoeff in boundary_gen(gi).terms.items():
                    new = list(word[:i]) + list(dword) + list(word[i + 1:])
                    pos = j if j < i else j + len(dword) - 1
                    new[pos] = SylGen(a, b)
                    total = total + Expr({tuple(new): dcoeff})
                yield total


from functools import lru_cache


@lru_cache(maxsize=65536)
def _word_moves(word: Word, rs: RelationSet) -> Tuple[Tuple[Tuple[Word, Scalar], ...], ...]:
    return tuple(tuple(e.terms.items()) for e in _gen_word_moves(word, rs))


def _neighbours(state: State, rs: RelationSet) -> Iterable[State]:
    base = dict(state)
    for word, coeff in state:
        for moved in _word_moves(word, rs):
            out = dict(base)
            rem = out[word] - coeff
            if rem.is_zero():
                del out[word]
            else:
                out[word] = rem
            for mword, mcoeff in moved:
                s = out.get(mword)
                s = mcoeff * coeff if s is None else s + mcoeff * coeff
                if s.is_zero():
                    out.pop(mword, None)
                else:
                    out[mword] = s
            yield frozenset(out.items())


from functools import lru_cache


@lru_cache(maxsize=65536)
def closure(word: Word, rs: RelationSet,
            max_nodes: int = 600) -> Optional[FrozenSet[State]]:
    """All expressions reachable from the word by single relation moves,
    or None when the cap is hit."""
    start = _state(Expr({word: ONE}))
    seen: Set[State] = {start}
    frontier: List[State] = [start]
    while frontier:
        nxt: List[State] = []
        for st in frontier:
            for nb in _neighbours(st, rs):
                if nb not in seen:
                    seen.add(nb)
                    if len(seen) > max_nodes:
                        return None
                    nxt.append(nb)
        frontier = nxt
    return frozenset(seen)


def decide(a: Word, b: Word, rs: RelationSet,
           max_nodes: int = 600) -> Optional[bool]:
    """Closure-intersection verdict: True / False, or None if capped."""
    if a == b:
        return True
    ca = closure(a, rs, max_nodes)
    if ca is None:
        return None
    # stream the second closure, stopping as soon as it meets the first
    start = _state(Expr({b: ONE}))
    if start in ca:
        return True
    seen: Set[State] = {start}
    frontier: List[State] = [start]
    while frontier:
        nxt: List[State] = []
        for st in frontier:
            for nb in _neighbours(st, rs):
                if nb in ca:
                    return True
                if nb not in seen:
                    seen.add(nb)
                    if len(seen) > max_nodes:
                        return None
                    nxt.append(nb)
        frontier = nxt
    return False


# --------------------------------------------------------------------------
# word sampling
# --------------------------------------------------------------------------

MAX_STRAND = 4
MAX_FACTORS = 5


def _random_group(rng: random.Random, pool: List[int]) -> frozenset:
    size = 1 if rng.random() < 0.75 else 2
    size = max(1, min(size, len(pool) - 1))
    chosen = rng.sample(pool, size)
    for x in chosen:
        pool.remove(x)
    return frozenset(chosen)


def random_generator(rng: random.Random,
                     allow_unit: bool = False) -> Generator:
    lo = 0 if allow_unit and rng.random() < 0.25 else 1
    pool = list(range(lo, MAX_STRAND + 1))
    kind = rng.random()
    if kind < 0.55 or len(pool) < 3:
        left = _random_group(rng, pool)
        right = _random_group(rng, pool)
        return TGen(left, right)
    if kind < 0.85:
        p = _random_group(rng, pool)
        q = _random_group(rng, pool)
        spectator = _random_group(rng, pool)
        if rng.random() < 0.5:
            return FTGen((p | q, spectator), (p, q))
        return FTGen((spectator, p | q), (p, q))
    a, b = rng.sample(pool, 2)
    return SylGen(a, b)


def random_word(rng: random.Random, allow_unit: bool = False) -> Word:
    length = rng.choice([1, 1, 1, 2, 2, 2, 3, 3, 4, 5])
    out = []
    degree = 0
    for _ in range(length):
        if length >= 4:
            # long words stay atomic so closures remain enumerable
            pool = list(range(1, MAX_STRAND + 1))
            a, b = rng.sample(pool, 2)
            g: Generator = TGen(frozenset({a}), frozenset({b}))
        else:
            g = random_generator(rng, allow_unit)
        if degree + g.degree < -1:
            g = random_generator(rng, allow_unit)
            if degree + g.degree < -1:
                continue
        degree += g.degree
        out.append(g)
    if not out:
        out = [TGen(frozenset({1}), frozenset({2}))]
    return tuple(out)


def scramble(word: Word, rng: random.Random, rs: RelationSet,
             steps: int = 3) -> Word:
    """Random walk along word-preserving moves (swaps, commutations,
    marker trades); the result is equal to the input by construction."""
    current = word
    for _ in range(steps):
        options = [
            e for e in _gen_word_moves(current, rs) if len(e.terms) == 1
            and all(c == ONE for c in e.terms.values())
        ]
        if not options:
            break
        current = next(iter(rng.choice(options).terms))
    return current


FLAG_POOL = [
    RelationSet(strict=True, symmetric=True),
    RelationSet(strict=True, totally_symmetric=True),
    RelationSet(strict=True, symmetric=True, totally_symmetric=True,
                coherent=True, unital=True),
    RelationSet(symmetric=True),
    RelationSet(unital=True),
]


def agreement_report(n_pairs: int, seed: int,
                     max_nodes: int = 110) -> Dict[str, int]:
    """Compare the engine verdict with the closure verdict on sampled
    word pairs.  Scrambled pairs exercise the equal direction; fresh
    pairs the unequal one."""
    from .rewrite import equivalent

    rng = random.Random(seed)
    counts = {"agree": 0, "disagree": 0, "unknown": 0}
    for k in range(n_pairs):
        rs = FLAG_POOL[k % len(FLAG_POOL)]
        a = random_word(rng, allow_unit=rs.eff_unital)
        if rng.random() < 0.5:
            b = scramble(a, rng, rs)
        else:
            b = random_word(rng, allow_unit=rs.eff_unital)
        engine = equivalent(Expr({a: ONE}), Expr({b: ONE}), rs)
        brute = decide(a, b, rs, max_nodes)
        if brute is None:
            counts["unknown"] += 1
        elif brute == engine:
            counts["agree"] += 1
        else:
            counts["disagree"] += 1
    return counts
