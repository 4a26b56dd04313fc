import pytest

from dqv.catalog import CHECKS, gamma_stripped_breen_defect, run_all, run_check
from dqv.rewrite import FlagError, RelationSet
from dqv.series import H, HBAR


def test_catalogue_has_at_least_seventeen_checks():
    assert len(CHECKS) >= 17


@pytest.mark.parametrize("check_id", sorted(CHECKS))
def test_check_passes(check_id):
    result = run_check(check_id)
    assert result.passed, result.residuals


def test_run_all_covers_registry():
    results = run_all()
    assert {r.check_id for r in results} == set(CHECKS)


def test_unknown_check_rejected():
    with pytest.raises(KeyError):
        run_check("no-such-check")


def test_third_order_checks_use_second_convention():
    for cid in ("pentagonator-h3", "prehex-right-h3", "syllepsis-h3"):
        assert CHECKS[cid].default_convention == HBAR
        assert CHECKS[cid].default_order == 3


def test_order_two_checks_use_first_convention():
    for cid in ("pentagon-h2", "hexagonator-h2-left", "hexagonator-h2-right"):
        assert CHECKS[cid].default_convention == H


def test_conjugator_strip_requires_total_symmetry():
    with pytest.raises(FlagError):
        gamma_stripped_breen_defect(RelationSet(symmetric=True, strict=True))
    out = gamma_stripped_breen_defect(
        RelationSet(strict=True, totally_symmetric=True)
    )
    assert all(e.is_zero() for e in out)


def test_breen_check_reports_expected_residual():
    result = run_check("breen-h2")
    assert result.passed
    assert result.residuals["residual is -4 * coherency sum"] == "True"
