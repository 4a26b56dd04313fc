import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dqv.algebra import left_homotopy, t
from dqv.parser import ParseError, Parsed, parse, print_parsed
from dqv.rewrite import RelationSet
from dqv.series import H, HBAR, from_expr


def test_atomic_pairing():
    v = parse("t[1,2]")
    assert v.series == from_expr(t(1, 2))
    assert v.parameter is None


def test_grouped_pairing_and_homotopy():
    assert parse("t[(1,2),3]").series == from_expr(t((1, 2), 3))
    assert parse("L[1,2,3]").series == from_expr(left_homotopy(1, 2, 3))


def test_commutator_and_boundary():
    a, b = t(1, 2), t(2, 3)
    v = parse("comm(t[1,2],t[2,3])")
    assert v.series == from_expr(a * b - b * a)
    d = parse("d(L[1,2,3])").series
    tc = from_expr(t((1, 2), 3))
    tp = from_expr(t(1, 2))
    assert d == tp * tc - tc * tp


def test_parameter_tracking():
    assert parse("h^2*t[1,2]").parameter == H
    assert parse("hbar*t[1,2]").parameter == HBAR
    with pytest.raises(ParseError):
        parse("h*hbar*t[1,2]")


def test_unit_strand_normalizes_to_zero():
    v = parse("t[1,0]")
    rs = RelationSet(unital=True)
    assert v.series.normalize(rs).is_zero()


def test_scalar_forms():
    assert parse("1/24 + 1/24").series == parse("1/12").series
    assert parse("pi^-2 * pi^2").series == parse("1").series
    assert parse("i*i").series == parse("-1").series


def test_rejects_garbage():
    for bad in ["t[1", "q[1,2]", "t[1,2] +", "1//2", "zeta3^-1", "&"]:
        with pytest.raises(ParseError):
            parse(bad)


_label = st.integers(min_value=0, max_value=4)
_group = st.sets(_label, min_size=1, max_size=2).map(
    lambda s: "(%s)" % ",".join(map(str, sorted(s))) if len(s) > 1 else str(min(s))
)
_scalar = st.one_of(
    st.just("pi"),
    st.just("i"),
    st.just("zeta3"),
    st.builds(lambda p, q: "%d/%d" % (p, q),
              st.integers(-9, 9), st.integers(1, 9)),
)
_gen = st.one_of(
    st.builds(lambda a, b: "t[%s,%s]" % (a, b), _group, _group),
    st.builds(lambda a, b, c: "L[%s,%s,%s]" % (a, b, c), _group, _group, _group),
    st.builds(lambda a, b, c: "R[%s,%s,%s]" % (a, b, c), _group, _group, _group),
    st.builds(lambda a, b: "Syl[%d,%d]" % (a, b),
              st.integers(1, 4), st.integers(1, 4).map(lambda x: x)),
)


@st.composite
def _expression(draw):
    n_terms = draw(st.integers(1, 3))
    terms = []
    for _ in range(n_terms):
        factors = draw(st.lists(_gen, min_size=1, max_size=2))
        coeff = draw(st.one_of(st.just(None), _scalar))
        body = "*".join(factors)
        if coeff is not None:
            body = "(%s)*%s" % (coeff, body)
        power = draw(st.integers(0, 3))
        if power:
            body = "%s*h^%d" % (body, power)
        terms.append(body)
    return " + ".join(terms)


@settings(max_examples=150, deadline=None)
@given(_expression())
def test_round_trip_property(text):
    try:
        value = parse(text)
    except ParseError:
        # generated overlaps (t[0,0], Syl[2,2], ...) are rejected cleanly
        return
    printed = print_parsed(value)
    again = parse(printed)
    assert again.series == value.series
    assert print_parsed(Parsed(again.series, value.parameter)) == printed
