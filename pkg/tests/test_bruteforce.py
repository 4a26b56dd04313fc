import random

from dqv import bruteforce as bf
from dqv.algebra import Expr, FTGen, SylGen, TGen
from dqv.rewrite import RelationSet, equivalent
from dqv.scalars import ONE

f = frozenset
STRICT_SYM = RelationSet(strict=True, symmetric=True)


def test_swap_pairs_decided_equal():
    a = (TGen(f({2}), f({1})),)
    b = (TGen(f({1}), f({2})),)
    assert bf.decide(a, b, STRICT_SYM) is True


def test_commutation_decided_equal():
    a = (TGen(f({1}), f({2})), TGen(f({3}), f({4})))
    b = (TGen(f({3}), f({4})), TGen(f({1}), f({2})))
    assert bf.decide(a, b, STRICT_SYM) is True


def test_distinct_words_decided_unequal():
    a = (TGen(f({1}), f({2})),)
    b = (TGen(f({1}), f({3})),)
    assert bf.decide(a, b, STRICT_SYM) is False


def test_composite_expansion_reachable():
    word = (TGen(f({1, 2}), f({3})),)
    states = bf.closure(word, STRICT_SYM)
    atoms = Expr({
        (TGen(f({1}), f({3})),): ONE,
        (TGen(f({2}), f({3})),): ONE,
    })
    assert bf._state(atoms) in states


def test_marker_trade_decided_equal():
    a = (TGen(f({1}), f({2})), SylGen(3, 4))
    b = (SylGen(1, 2), TGen(f({3}), f({4})))
    assert bf.decide(a, b, STRICT_SYM) is True


def test_capped_search_reports_unknown():
    word = (FTGen((f({1, 2}), f({3, 4})), (f({1}), f({2}))),
            TGen(f({1}), f({2})))
    other = (TGen(f({1}), f({3})),)
    assert bf.decide(word, other, STRICT_SYM, max_nodes=1) is None


def test_scrambles_stay_equal():
    rng = random.Random(3)
    for _ in range(50):
        rs = bf.FLAG_POOL[rng.randrange(len(bf.FLAG_POOL))]
        a = bf.random_word(rng, allow_unit=rs.eff_unital)
        b = bf.scramble(a, rng, rs)
        assert equivalent(Expr({a: ONE}), Expr({b: ONE}), rs)


def test_agreement_smoke():
    rep = bf.agreement_report(300, seed=17)
    assert rep["disagree"] == 0
    assert rep["agree"] >= 200
