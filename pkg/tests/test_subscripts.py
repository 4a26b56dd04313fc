from dqv.algebra import FTGen, boundary, comm, ft, left_homotopy, right_homotopy, t
from dqv.rewrite import RelationSet, equivalent, normalize
from dqv.subscripts import composite_shapes, derive_primitivity, primitivity_expand

TS = RelationSet(strict=True, totally_symmetric=True)


def _ftgen(outer, inner):
    from dqv.algebra import _group

    return FTGen(
        (_group(outer[0]), _group(outer[1])), (_group(inner[0]), _group(inner[1]))
    )


def test_derived_expansion_matches_known_left_splits():
    g = _ftgen(({1, 2}, {3, 4}), (1, 2))
    assert derive_primitivity(g) == left_homotopy(1, 2, 3) + left_homotopy(1, 2, 4)

    g = _ftgen(({1, 2, 3}, 4), (1, {2, 3}))
    assert derive_primitivity(g) == left_homotopy(1, 2, 4) + left_homotopy(1, 3, 4)

    g = _ftgen(({1, 2, 3}, 4), ({1, 2}, 3))
    assert derive_primitivity(g) == left_homotopy(1, 3, 4) + left_homotopy(2, 3, 4)


def test_derived_expansion_matches_known_right_splits():
    g = _ftgen((1, {2, 3, 4}), (2, {3, 4}))
    assert derive_primitivity(g) == right_homotopy(1, 2, 3) + right_homotopy(1, 2, 4)

    g = _ftgen(({1, 2}, {3, 4}), (3, 4))
    assert derive_primitivity(g) == right_homotopy(1, 3, 4) + right_homotopy(2, 3, 4)


def test_two_routes_agree_on_shape_catalogue():
    shapes = composite_shapes(max_strands=5, limit=100)
    assert len(shapes) == 100
    for g in shapes:
        assert primitivity_expand(g) == derive_primitivity(g)


def test_expansion_commutes_with_boundary_up_to_relations():
    # the boundary of the composite homotopy and the boundary of its atomic
    # expansion agree once composite pairings are expanded
    for g in composite_shapes(max_strands=4, limit=30):
        lhs = boundary(normalize(primitivity_expand(g), TS))
        from dqv.algebra import Expr
        from dqv.scalars import ONE

        rhs = boundary(Expr({(g,): ONE}))
        assert equivalent(lhs, rhs, TS)


def test_atomic_shape_expands_to_itself():
    g = _ftgen(({1, 2}, 3), (1, 2))
    from dqv.algebra import Expr
    from dqv.scalars import ONE

    assert primitivity_expand(g) == Expr({(g,): ONE})
    assert derive_primitivity(g) == Expr({(g,): ONE})
