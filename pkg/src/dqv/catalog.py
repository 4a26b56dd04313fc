"""Catalogue of verifiable identities.

Every entry re-derives one identity of the deformation calculus inside the
engine, with no pre-computed answers: the check builds both sides (or a
candidate homotopy and the defect it must bound), normalises, and requires
an exact zero.  Checks that are expected to fail when a relation is
switched off also verify the converse, including the exact shape of the
residual where one is predicted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .algebra import (
    Expr,
    ZERO_EXPR,
    boundary,
    comm,
    ft,
    left_homotopy,
    relabel,
    right_homotopy,
    syl,
    t,
    _group,
)
from .rewrite import FlagError, RelationSet, equivalent, normalize
from .scalars import rational
from . import series as sr
from .series import H, HBAR, Series
from .subscripts import composite_shapes, derive_primitivity, primitivity_expand

DEFAULT_FLAGS = RelationSet(
    strict=True, symmetric=True, totally_symmetric=True, coherent=True, unital=True
)


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    convention: str
    order: int
    flags: RelationSet
    residuals: Dict[str, str] = field(default_factory=dict)
    notes: str = ""
    duration_s: float = 0.0

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return "%-24s %s  (%.3fs)" % (self.check_id, status, self.duration_s)


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    description: str
    default_convention: str
    default_order: int
    fn: Callable[[RelationSet, str, int], CheckResult]


def _result(check_id, convention, order, flags, residuals, notes=""):
    rendered = {k: repr(v) if isinstance(v, Expr) else str(v) for k, v in residuals.items()}
    passed = all(
        (v.is_zero() if isinstance(v, Expr) else bool(v))
        for v in residuals.values()
    )
    return CheckResult(check_id, passed, convention, order, flags, rendered, notes)


def _rl(build, i, j, k):
    return relabel(build(1, 2, 3), {1: i, 2: j, 3: k})


def _composite_left(u, v, w) -> Expr:
    return ft((_group(u) | _group(v), w), (u, v))


def _composite_right(u, v, w) -> Expr:
    return ft((u, _group(v) | _group(w)), (v, w))


def _hex_left(u, v, w) -> Expr:
    return 2 * _composite_left(u, v, w) + _composite_right(u, v, w)


def _hex_right(u, v, w) -> Expr:
    return _composite_left(u, v, w) + 2 * _composite_right(u, v, w)


# --- order <= 2 coherence of the associator ansatz -------------------------


def _check_pentagon_h2(rs, convention, order):
    lhs, rhs = sr.pentagon_sides(convention, order)
    diff = lhs - rhs
    residuals = {
        "order %d" % k: normalize(diff.coeff(k), rs) for k in range(order + 1)
    }
    # converse: without commuting disjoint strands, the order-2 defect is
    # exactly (1/24)([t12,t34] + [t13,t24])
    rs_off = RelationSet(
        strict=rs.eff_strict, symmetric=rs.eff_symmetric, disjoint_commute=False
    )
    expected = (comm(t(1, 2), t(3, 4)) + comm(t(1, 3), t(2, 4))) * rational(1, 24)
    got = normalize(diff.coeff(2), rs_off)
    residuals["converse residual matches"] = got == normalize(expected, rs_off)
    return _result("pentagon-h2", convention, order, rs, residuals)


def _check_hexagon_h1(side):
    def run(rs, convention, order):
        lhs, rhs = sr.prehex_sides(side, convention, order)
        diff = lhs - rhs
        residuals = {
            "order %d" % k: normalize(diff.coeff(k), rs) for k in range(order + 1)
        }
        # without splitting composite pairings the order-1 defect survives
        rs_off = RelationSet(symmetric=True)
        residuals["converse nonzero"] = not normalize(diff.coeff(1), rs_off).is_zero()
        return _result("hexagon-h1-%s" % side, convention, order, rs, residuals)

    return run


def _check_hexagonator_h2(side):
    def run(rs, convention, order):
        lhs, rhs = sr.prehex_sides(side, convention, order)
        cand = sr.hexagonator_candidate(side, convention, order)
        res = sr.verify_modification(cand, lhs - rhs, rs)
        residuals = {"order %d" % k: v for k, v in res.items()}
        return _result("hexagonator-h2-%s" % side, convention, order, rs, residuals)

    return run


def _check_fourterm_third(rs, convention, order):
    L = left_homotopy(1, 2, 3)
    R = right_homotopy(1, 2, 3)
    residuals = {
        "boundary identity": normalize(
            boundary(L + R) - comm(t(1, 2) + t(2, 3), t(1, 3)), rs
        ),
        "converse nonzero": not normalize(
            boundary(L + R) - comm(t(1, 2) + t(2, 3), t(1, 3)), RelationSet()
        ).is_zero(),
    }
    return _result("fourterm-third", convention, order, rs, residuals)


# --- symmetry collapses ----------------------------------------------------

_SYM_PAIRS = [
    ("L123~R312", (left_homotopy, (1, 2, 3)), (right_homotopy, (3, 1, 2))),
    ("L213~R321", (left_homotopy, (2, 1, 3)), (right_homotopy, (3, 2, 1))),
    ("R123~L231", (right_homotopy, (1, 2, 3)), (left_homotopy, (2, 3, 1))),
    ("R132~L321", (right_homotopy, (1, 3, 2)), (left_homotopy, (3, 2, 1))),
    ("L132~R213", (left_homotopy, (1, 3, 2)), (right_homotopy, (2, 1, 3))),
    ("L312~R231", (left_homotopy, (3, 1, 2)), (right_homotopy, (2, 3, 1))),
]

_TOTALSYM_CHAINS = [
    [(left_homotopy, (1, 2, 3)), (right_homotopy, (3, 1, 2)),
     (left_homotopy, (2, 1, 3)), (right_homotopy, (3, 2, 1))],
    [(right_homotopy, (1, 2, 3)), (left_homotopy, (2, 3, 1)),
     (right_homotopy, (1, 3, 2)), (left_homotopy, (3, 2, 1))],
    [(left_homotopy, (1, 3, 2)), (right_homotopy, (2, 1, 3)),
     (left_homotopy, (3, 1, 2)), (right_homotopy, (2, 3, 1))],
]


def _check_sym_collapse(rs, convention, order):
    sym = RelationSet(symmetric=True)
    plain = RelationSet()
    residuals = {}
    for name, (ba, pa), (bb, pb) in _SYM_PAIRS:
        a, b = _rl(ba, *pa), _rl(bb, *pb)
        residuals[name] = normalize(a - b, sym)
        residuals[name + " distinct without"] = not equivalent(a, b, plain)
    return _result("sym-collapse", convention, order, sym, residuals)


def _check_totalsym_collapse(rs, convention, order):
    ts = RelationSet(strict=True, totally_symmetric=True)
    sym = RelationSet(symmetric=True)
    residuals = {}
    for ci, chain in enumerate(_TOTALSYM_CHAINS):
        exprs = [_rl(b, *p) for b, p in chain]
        for k, other in enumerate(exprs[1:], start=1):
            residuals["chain%d #%d" % (ci, k)] = normalize(exprs[0] - other, ts)
    # the chains stay distinct from each other
    chain_reps = [_rl(chain[0][0], *chain[0][1]) for chain in _TOTALSYM_CHAINS]
    residuals["chains distinct"] = not (
        equivalent(chain_reps[0], chain_reps[1], ts)
        or equivalent(chain_reps[0], chain_reps[2], ts)
        or equivalent(chain_reps[1], chain_reps[2], ts)
    )
    # inner-order identification needs total symmetry, not plain symmetry
    residuals["needs total symmetry"] = not equivalent(
        left_homotopy(1, 2, 3), left_homotopy(2, 1, 3), sym
    )
    # the two hexagon combinations merge under total symmetry
    h_left = 2 * left_homotopy(1, 2, 3) + right_homotopy(1, 2, 3)
    h_right_321 = _rl(left_homotopy, 3, 2, 1) + 2 * _rl(right_homotopy, 3, 2, 1)
    residuals["hex combos merge"] = normalize(h_left - h_right_321, ts)
    residuals["hex combos split under sym"] = not equivalent(h_left, h_right_321, sym)
    return _result("totalsym-collapse", convention, order, ts, residuals)


def _check_primitivity(rs, convention, order):
    shapes = composite_shapes(max_strands=5, limit=100)
    bad = [g for g in shapes if primitivity_expand(g) != derive_primitivity(g)]
    residuals = {
        "shapes agree": not bad,
        "shape count is 100": len(shapes) == 100,
    }
    notes = "" if not bad else "first disagreement: %r" % bad[0]
    return _result("primitivity", convention, order, rs, residuals, notes)


# --- composite-subscript reductions at order 2 -----------------------------


def _check_tetrahedron(side):
    def run(rs, convention, order):
        hx = _hex_left if side == "left" else _hex_right
        lhs = hx(1, 2, frozenset({3, 4}))
        rhs = hx(1, frozenset({2, 3}), 4) + hx(1, 2, 3) - hx(1, 3, 4)
        residuals = {"reduction": normalize(lhs - rhs, rs)}
        return _result("tetrahedron-%s-h2" % side, convention, order, rs, residuals)

    return run


def _check_hexahedron(rs, convention, order):
    lhs = _hex_right(1, 2, frozenset({3, 4})) - _hex_left(frozenset({1, 2}), 3, 4)
    rhs = (
        _hex_right(1, 2, 4)
        + _hex_right(1, 2, 3)
        - _hex_left(1, 3, 4)
        - _hex_left(2, 3, 4)
    )
    residuals = {"reduction": normalize(lhs - rhs, rs)}
    return _result("hexahedron-h2", convention, order, rs, residuals)


def _check_breen_h2(rs, convention, order):
    lhs = (
        2 * left_homotopy(1, 2, 3)
        + right_homotopy(1, 2, 3)
        - 6 * right_homotopy(1, 2, 3)
        - 2 * _rl(left_homotopy, 1, 3, 2)
        - _rl(right_homotopy, 1, 3, 2)
    )
    rhs = (
        _rl(left_homotopy, 2, 1, 3)
        + 2 * _rl(right_homotopy, 2, 1, 3)
        + 6 * left_homotopy(1, 2, 3)
        - left_homotopy(1, 2, 3)
        - 2 * right_homotopy(1, 2, 3)
    )
    with_coh = rs if rs.coherent else RelationSet(
        strict=True, totally_symmetric=True, coherent=True
    )
    without_coh = RelationSet(strict=True, totally_symmetric=True)
    res_with = normalize(lhs - rhs, with_coh)
    res_without = normalize(lhs - rhs, without_coh)
    expected = normalize(
        -4
        * (
            left_homotopy(1, 2, 3)
            + right_homotopy(1, 2, 3)
            + _rl(left_homotopy, 1, 3, 2)
        ),
        without_coh,
    )
    residuals = {
        "zero with coherency": res_with,
        "nonzero without": not res_without.is_zero(),
        "residual is -4 * coherency sum": res_without == expected,
    }
    notes = "equality holds iff the three-class sum vanishes"
    return _result("breen-h2", convention, order, with_coh, residuals, notes)


def _check_triangle_prism(rs, convention, order):
    uni = RelationSet(unital=True)
    phi = sr.kz_phi(t(1, 0), t(0, 3), convention, order)
    residuals = {}
    for k in range(1, order + 1):
        residuals["associator order %d" % k] = normalize(phi.coeff(k), uni)
    br = sr.braiding_exp(t(0, 2), convention, order)
    for k in range(1, order + 1):
        residuals["braiding order %d" % k] = normalize(br.coeff(k), uni)
    cas = sr.loop_cascade(syl(0, 2), t(0, 2), order)
    for k, e in cas.coeffs().items():
        residuals["loop cascade order %d" % k] = normalize(e, uni)
    return _result("triangle-prism", convention, order, uni, residuals)


# --- third-order data ------------------------------------------------------


def _check_pentagonator_h3(rs, convention, order):
    lhs, rhs = sr.pentagon_sides(HBAR, order)
    cand = sr.pentagonator_candidate(order)
    res = sr.verify_modification(cand, lhs - rhs, rs)
    residuals = {"order %d" % k: v for k, v in res.items()}
    return _result("pentagonator-h3", HBAR, order, rs, residuals)


def _check_prehex_right_h3(rs, convention, order):
    lhs, rhs = sr.prehex_sides("right", HBAR, order)
    cand = sr.prehex_right_candidate(order)
    res = sr.verify_modification(cand, lhs - rhs, rs)
    residuals = {"order %d" % k: v for k, v in res.items()}
    return _result("prehex-right-h3", HBAR, order, rs, residuals)


def _check_syllepsis_h2(rs, convention, order):
    left_disp = (
        2 * left_homotopy(1, 2, 3)
        + right_homotopy(1, 2, 3)
        + _rl(left_homotopy, 2, 3, 1)
        + 2 * _rl(right_homotopy, 2, 3, 1)
        - 12 * t(1, 3) * syl(1, 2)
        + 12 * syl(1, 3) * t(1, 2)
    )
    right_disp = (
        left_homotopy(1, 2, 3)
        + 2 * right_homotopy(1, 2, 3)
        + 2 * _rl(left_homotopy, 3, 1, 2)
        + _rl(right_homotopy, 3, 1, 2)
        - 12 * t(1, 3) * syl(2, 3)
        + 12 * syl(1, 3) * t(2, 3)
    )
    rs_off = RelationSet(
        strict=True, totally_symmetric=True, coherent=True, syl_exchange=False
    )
    residuals = {
        "left factorisation": normalize(left_disp, rs),
        "right factorisation": normalize(right_disp, rs),
        "pairing commutes with loop": normalize(comm(t(1, 2), syl(1, 2)), rs),
        "needs marker exchange": not normalize(left_disp, rs_off).is_zero(),
    }
    return _result("syllepsis-h2", convention, order, rs, residuals)


def _check_syllepsis_h3(side):
    def run(rs, convention, order):
        lhs, rhs = sr.syllepsis_factorisation(side, order)
        diff = lhs - rhs
        residuals = {
            "order %d" % k: normalize(diff.coeff(k), rs) for k in range(order + 1)
        }
        cid = "syllepsis-h3" if side == "right" else "syllepsis-h3-left"
        return _result(cid, HBAR, order, rs, residuals)

    return run


def gamma_stripped_breen_defect(rs: RelationSet) -> List[Expr]:
    """Order-1 defect of the hexagonal polytope axiom with the braiding
    conjugators stripped.  Stripping is only sound when the pairing is
    conjugation-invariant, which is what total symmetry grants; without it
    the helper refuses rather than silently dropping the conjugators."""
    if not rs.totally_symmetric:
        raise FlagError(
            "conjugator stripping requires the totally_symmetric relation"
        )
    defects = [
        t(2, 1) - t(1, 2),
        t(frozenset({2, 1}), 3) - t(1, 3) - t(2, 3),
    ]
    return [normalize(d, rs) for d in defects]


def _check_breen_t_from_totalsym(rs, convention, order):
    ts = rs if rs.totally_symmetric else RelationSet(
        strict=True, totally_symmetric=True
    )
    stripped = gamma_stripped_breen_defect(ts)
    residuals = {
        "defect %d" % i: e for i, e in enumerate(stripped)
    }
    try:
        gamma_stripped_breen_defect(RelationSet(symmetric=True, strict=True))
        residuals["refuses without total symmetry"] = False
    except FlagError:
        residuals["refuses without total symmetry"] = True
    return _result("breen-t-from-totalsym", convention, order, ts, residuals)


# --- registry --------------------------------------------------------------

CHECKS: Dict[str, CheckSpec] = {}


def _register(check_id, description, fn, convention=H, order=2):
    CHECKS[check_id] = CheckSpec(check_id, description, convention, order, fn)


_register("pentagon-h2", "associator pentagon closes through order 2",
          _check_pentagon_h2)
_register("hexagon-h1-left", "left braiding hexagon closes through order 1",
          _check_hexagon_h1("left"), order=1)
_register("hexagon-h1-right", "right braiding hexagon closes through order 1",
          _check_hexagon_h1("right"), order=1)
_register("hexagonator-h2-left",
          "second-order homotopy bounds the left hexagon defect",
          _check_hexagonator_h2("left"))
_register("hexagonator-h2-right",
          "second-order homotopy bounds the right hexagon defect",
          _check_hexagonator_h2("right"))
_register("fourterm-third",
          "boundary of the homotopy sum gives the third four-term relator",
          _check_fourterm_third)
_register("sym-collapse", "the six side-swap identifications of homotopies",
          _check_sym_collapse)
_register("totalsym-collapse",
          "the twelve identifications under total symmetry",
          _check_totalsym_collapse)
_register("primitivity",
          "composite homotopy splitting: direct table vs derived route",
          _check_primitivity)
_register("tetrahedron-left-h2",
          "four-strand reduction of the left hexagon combination",
          _check_tetrahedron("left"))
_register("tetrahedron-right-h2",
          "four-strand reduction of the right hexagon combination",
          _check_tetrahedron("right"))
_register("hexahedron-h2",
          "mixed four-strand reduction of both hexagon combinations",
          _check_hexahedron)
_register("breen-h2",
          "polytope chain closes exactly when the three-class sum vanishes",
          _check_breen_h2)
_register("triangle-prism",
          "all deformation data degenerates on the unit strand",
          _check_triangle_prism, order=3)
_register("pentagonator-h3",
          "third-order homotopy bounds the pentagon defect",
          _check_pentagonator_h3, convention=HBAR, order=3)
_register("prehex-right-h3",
          "third-order homotopy bounds the right hexagon defect",
          _check_prehex_right_h3, convention=HBAR, order=3)
_register("syllepsis-h2",
          "second-order loop factorisations of the hexagon homotopies",
          _check_syllepsis_h2)
_register("syllepsis-h3",
          "third-order loop factorisation, right version",
          _check_syllepsis_h3("right"), convention=HBAR, order=3)
_register("syllepsis-h3-left",
          "third-order loop factorisation, left version",
          _check_syllepsis_h3("left"), convention=HBAR, order=3)
_register("breen-t-from-totalsym",
          "conjugator-stripped polytope defect vanishes given total symmetry",
          _check_breen_t_from_totalsym)


def run_check(
    check_id: str,
    rs: Optional[RelationSet] = None,
    convention: Optional[str] = None,
    order: Optional[int] = None,
) -> CheckResult:
    spec = CHECKS.get(check_id)
    if spec is None:
        raise KeyError("unknown check %r" % check_id)
    rs = rs if rs is not None else DEFAULT_FLAGS
    convention = convention if convention is not None else spec.default_convention
    order = order if order is not None else spec.default_order
    start = time.monotonic()
    result = spec.fn(rs, convention, order)
    result.duration_s = time.monotonic() - start
    return result


def run_all(
    rs: Optional[RelationSet] = None,
    convention: Optional[str] = None,
    order: Optional[int] = None,
) -> List[CheckResult]:
    return [run_check(cid, rs, convention, order) for cid in CHECKS]
