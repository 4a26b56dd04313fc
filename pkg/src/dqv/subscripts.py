"""Calculus of composite strand subscripts for the degree-(-1) homotopies.

``primitivity_expand`` is the direct one-strand-per-group expansion (the
table used by the normaliser).  ``derive_primitivity`` re-derives the same
expansion along an independent route: it strict-normalises the inner
pairing of the composite homotopy into atomic pairings first and rebuilds
an atomic homotopy for each resulting (p, q) choice, splitting the
spectator group one strand at a time.  Strands of the refined side that
sit outside the inner groups drop out (they pair with nothing once the
unit-strand removal has done its work).  Agreement of the two routes is a
test obligation, not an assumption.
"""

from __future__ import annotations

import itertools
from typing import Iterable, List

from .algebra import Expr, FTGen, TGen, ZERO_EXPR
from .rewrite import RelationSet, expand_composite_ft, normalize
from .scalars import ONE

primitivity_expand = expand_composite_ft


def derive_primitivity(gen: FTGen) -> Expr:
    """Independent derivation of the atomic expansion of a composite
    homotopy via strict normalisation of its inner pairing."""
    inner_pairing = Expr({(TGen(gen.inner[0], gen.inner[1]),): ONE})
    flat = normalize(inner_pairing, RelationSet(strict=True, syl_exchange=False))
    spectator = gen.outer[1] if gen.side == "left" else gen.outer[0]
    out = ZERO_EXPR
    for word, coeff in flat.terms.items():
        (atom_t,) = word
        (p,) = tuple(atom_t.left)
        (q,) = tuple(atom_t.right)
        for s in sorted(spectator):
            if gen.side == "left":
                atom = FTGen((frozenset({p, q}), frozenset({s})), ({p}, {q}))
            else:
                atom = FTGen((frozenset({s}), frozenset({p, q})), ({p}, {q}))
            out = out + Expr({(atom,): coeff})
    return out


def _partitions_into_groups(labels: List[int], parts: int) -> Iterable[List[frozenset]]:
    """Ordered partitions of ``labels`` into ``parts`` nonempty groups,
    preserving that groups are plain sets."""
    if parts == 1:
        yield [frozenset(labels)]
        return
    rest = labels[1:]
    first = labels[0]
    for mask in itertools.product(range(parts), repeat=len(rest)):
        groups: List[set] = [set() for _ in range(parts)]
        groups[0].add(first)
        for lab, g in zip(rest, mask):
            groups[g].add(lab)
        if all(groups):
            yield [frozenset(g) for g in groups]


def composite_shapes(max_strands: int = 5, limit: int = 100) -> List[FTGen]:
    """A deterministic catalogue of composite homotopy shapes used to
    cross-check the two expansion routes."""
    shapes: List[FTGen] = []
    for n in range(3, max_strands + 1):
        labels = list(range(1, n + 1))
        for split in range(2, n):
            for refined in itertools.combinations(labels, split):
                spectator = frozenset(set(labels) - set(refined))
                for p, q in _partitions_into_groups(list(refined), 2):
                    for side in ("left", "right"):
                        if side == "left":
                            outer = (p | q, spectator)
                        else:
                            outer = (spectator, p | q)
                        shapes.append(FTGen(outer, (p, q)))
                        if len(shapes) >= limit:
                            return shapes
    return shapes
