import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

import dqv.model as m

DATA = Path(__file__).parent / "data"


def small_cat():
    # two generators sharing a hom space so the truncation quotient is
    # nontrivial
    edges = [(0, 1), (1, 2), (0, 2)]
    q0 = m.TwoGen("q0", 0, 2, ((((0, 1), (1, 2)), Fraction(1)),
                               ((((0, 2),)), Fraction(-1))))
    return m.ModelCat(3, edges, [q0])


def test_paths_enumeration():
    cat = small_cat()
    assert cat.paths(0, 2) == [((0, 1), (1, 2)), (((0, 2),))]
    assert cat.paths(0, 0) == [()]
    assert cat.paths(2, 0) == []


def test_boundary_of_generator():
    cat = small_cat()
    q = cat.two_gen_cell("q0")
    d = cat.boundary(q)
    assert d.vec == {((0, 1), (1, 2)): Fraction(1), (((0, 2),)): Fraction(-1)}


def test_degree_minus_one_products_vanish():
    cat = small_cat()
    rng = random.Random(0)
    assert m._truncation_samples(cat, rng, count=20)


def test_compose_is_associative_on_samples():
    cat = small_cat()
    f = cat.generator_cell((0, 1))
    g = cat.generator_cell((1, 2))
    q = cat.two_gen_cell("q0")
    left = cat.compose(cat.compose(q, cat.identity(0)), cat.identity(0))
    assert left == q
    gf = cat.compose(g, f)
    assert gf.vec == {((0, 1), (1, 2)): Fraction(1)}


def test_product_category_mixed_relation():
    cat = small_cat()
    prod = m.ProductCat(cat, cat)
    q = cat.two_gen_cell("q0")
    w = cat.identity(0)
    # (d q) x q  ==  q x (d q) in the product quotient
    lhs = prod.pair_cell(cat.boundary(q), q)
    rhs = prod.pair_cell(q, cat.boundary(q))
    assert lhs == rhs
    assert prod.pair_cell(q, q).is_zero()
    del w


def test_functor_generation_is_strict():
    cat = small_cat()
    rng = random.Random(5)
    for _ in range(10):
        obj_map = m._monotone_maps(rng, cat.n_objects, 1)[0]
        f = m.random_functor(cat, obj_map, rng)
        assert f.check_strict()


def test_pseudonat_generation_satisfies_axioms():
    cat = small_cat()
    rng = random.Random(7)
    maps = m._monotone_maps(rng, cat.n_objects, 2)
    F = m.random_functor(cat, maps[0], rng)
    G = m.random_functor(cat, maps[1], rng)
    xi = m.random_pseudonat(F, G, rng)
    assert xi.check() == []
    # identity path contributes nothing
    for u in cat.objects():
        assert xi.at_path((), u).is_zero()


def test_modification_generation_satisfies_axioms():
    cat = small_cat()
    rng = random.Random(11)
    maps = m._monotone_maps(rng, cat.n_objects, 2)
    F = m.random_functor(cat, maps[0], rng)
    G = m.random_functor(cat, maps[1], rng)
    xi = m.random_pseudonat(F, G, rng)
    mod = m.random_modification(xi, rng)
    assert mod.check() == []
    assert mod.target.check() == []


@pytest.mark.parametrize("seed", range(12))
def test_instance_passes(seed):
    report = m.oracle_instance(seed)
    assert report.passed, report.checks


def test_hundred_instances_all_pass():
    for seed in range(100):
        report = m.oracle_instance(seed)
        assert report.passed, (seed, report.checks)


def test_serialization_round_trip():
    report = m.oracle_instance(3)
    payload = m.parse_instance(m.serialize_instance(report))
    assert payload["seed"] == 3
    assert payload["passed"] is True
    assert payload["version"] == m.FORMAT_VERSION


def test_serialization_rejects_unknown_version():
    report = m.oracle_instance(3)
    payload = json.loads(m.serialize_instance(report))
    payload["version"] = 999
    with pytest.raises(ValueError):
        m.parse_instance(json.dumps(payload))


def test_golden_fixture_seed_two():
    expected = (DATA / "instance_seed2.json").read_text()
    got = m.serialize_instance(m.oracle_instance(2))
    assert got == expected
