"""Acceptance gate: thirteen timed end-to-end criteria, one line each.

Each test prints its own PASS line on success; a failing assertion shows
up as the usual pytest failure for that criterion.  All equalities are
exact (rational/symbolic), there are no numeric tolerances; the only
budgets are wall-clock ones, asserted per criterion.
"""

import time

from dqv import bruteforce, model
from dqv.algebra import t
from dqv.catalog import run_check
from dqv.rewrite import RelationSet
from dqv.series import (
    H,
    HBAR,
    braiding_exp,
    hexagonator_candidate,
    kz_phi,
    pentagon_sides,
    substitute_parameter,
)

STRICT = RelationSet(strict=True)
STRICT_SYM = RelationSet(strict=True, symmetric=True)
STRICT_TS = RelationSet(strict=True, totally_symmetric=True)
STRICT_TS_COH = RelationSet(strict=True, totally_symmetric=True, coherent=True)


def _line(n, name):
    print("criterion %02d %-28s PASS" % (n, name))


def test_criterion_01_pentagon_h2():
    start = time.monotonic()
    result = run_check("pentagon-h2", STRICT)
    assert result.passed, result.residuals
    assert time.monotonic() - start < 1.0
    _line(1, "pentagon-h2")


def test_criterion_02_hexagon_h1_both_directions():
    start = time.monotonic()
    for cid in ("hexagon-h1-left", "hexagon-h1-right"):
        with_strict = run_check(cid, STRICT)
        assert with_strict.passed, with_strict.residuals
        without = run_check(cid, RelationSet(symmetric=True))
        assert not without.passed
    assert time.monotonic() - start < 1.0
    _line(2, "hexagon-h1 iff strict")


def test_criterion_03_hexagonator_h2():
    start = time.monotonic()
    for cid in ("hexagonator-h2-left", "hexagonator-h2-right"):
        result = run_check(cid, STRICT_SYM)
        assert result.passed, result.residuals
    assert time.monotonic() - start < 1.0
    _line(3, "hexagonator-h2 left/right")


def test_criterion_04_totalsym_collapse():
    start = time.monotonic()
    result = run_check("totalsym-collapse", STRICT_TS)
    assert result.passed, result.residuals
    assert time.monotonic() - start < 1.0
    _line(4, "totalsym collapse (12 ids)")


def test_criterion_05_primitivity():
    start = time.monotonic()
    result = run_check("primitivity", STRICT_TS)
    assert result.passed, result.residuals
    assert time.monotonic() - start < 5.0
    _line(5, "primitivity (100 shapes)")


def test_criterion_06_tetrahedra_and_hexahedron():
    start = time.monotonic()
    for cid in ("tetrahedron-left-h2", "tetrahedron-right-h2", "hexahedron-h2"):
        result = run_check(cid, STRICT_TS)
        assert result.passed, result.residuals
    assert time.monotonic() - start < 2.0
    _line(6, "tetrahedra + hexahedron")


def test_criterion_07_breen_iff():
    start = time.monotonic()
    result = run_check("breen-h2", STRICT_TS_COH)
    assert result.passed, result.residuals
    assert result.residuals["residual is -4 * coherency sum"] == "True"
    assert time.monotonic() - start < 1.0
    _line(7, "breen-h2 iff coherent")


def test_criterion_08_pentagonator_h3():
    start = time.monotonic()
    result = run_check("pentagonator-h3", STRICT_SYM, convention=HBAR)
    assert result.passed, result.residuals
    assert time.monotonic() - start < 5.0
    _line(8, "pentagonator-h3")


def test_criterion_09_prehex_right_h3():
    start = time.monotonic()
    result = run_check("prehex-right-h3", STRICT_SYM, convention=HBAR)
    assert result.passed, result.residuals
    assert time.monotonic() - start < 5.0
    _line(9, "prehex-right-h3")


def test_criterion_10_syllepsis():
    start = time.monotonic()
    for cid in ("syllepsis-h2", "syllepsis-h3"):
        result = run_check(cid, STRICT_TS_COH)
        assert result.passed, result.residuals
    assert time.monotonic() - start < 5.0
    _line(10, "syllepsis h2 + h3")


def test_criterion_11_concrete_oracle():
    start = time.monotonic()
    for seed in range(100):
        report = model.oracle_instance(seed)
        assert report.passed, (seed, report.checks)
    assert time.monotonic() - start < 30.0
    _line(11, "oracle (100 instances)")


def test_criterion_12_rewrite_soundness():
    start = time.monotonic()
    rep = bruteforce.agreement_report(10000, seed=2024)
    assert rep["disagree"] == 0, rep
    assert rep["agree"] >= 7500, rep
    assert time.monotonic() - start < 60.0
    _line(12, "rewrite soundness (10^4 pairs)")


def test_criterion_13_convention_coherence():
    start = time.monotonic()
    a, b = t(1, 2), t(2, 3)
    assert substitute_parameter(kz_phi(a, b, H)) == kz_phi(a, b, HBAR)
    assert substitute_parameter(braiding_exp(a, H)) == braiding_exp(a, HBAR)
    assert substitute_parameter(
        braiding_exp(a, H, sign=-1)
    ) == braiding_exp(a, HBAR, sign=-1)
    for side in ("left", "right"):
        assert substitute_parameter(
            hexagonator_candidate(side, H)
        ) == hexagonator_candidate(side, HBAR)
    lhs_h, rhs_h = pentagon_sides(H)
    lhs_hb, rhs_hb = pentagon_sides(HBAR)
    assert substitute_parameter(lhs_h) == lhs_hb
    assert substitute_parameter(rhs_h) == rhs_hb
    assert time.monotonic() - start < 1.0
    _line(13, "convention coherence")
