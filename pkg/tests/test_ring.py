from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bounded_paths.errors import NonUnitConstantTerm, NotDivisible, ParseError
from bounded_paths.ring import (
    ONE,
    ZERO,
    MPoly,
    check_var_name,
    mp_arith,
    mp_exact_div,
    parse,
    rational_series,
    reduce_fraction,
    univariate_gcd_in,
)

from conftest import mpolys

SYMS = sympy.symbols("x y z w1")


def to_sympy(p: MPoly):
    return sympy.sympify(str(p).replace("^", "**"), locals={s.name: s for s in SYMS})


def same(p: MPoly, expr) -> bool:
    return sympy.expand(to_sympy(p) - expr) == 0


# -- printing and parsing ------------------------------------------------------


def test_canonical_print_examples():
    assert str(parse("t^2*z^2 - z + 1")) == "1 - z + t^2*z^2"
    assert str(parse("t^4 + 1 - 3*t^2")) == "1 - 3*t^2 + t^4"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(parse("-x")) == "-x"


def test_variables_in_term_sorted_by_name():
    assert str(parse("y*x^2*b")) == "b*x^2*y"


def test_parse_accepts_double_star_and_unicode_minus():
    assert parse("t**2 − 1") == parse("t^2 - 1")


@pytest.mark.parametrize("text", ["", "(t+1)", "t^", "2*", "t^-1", "1 +", "t t"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse(text)


def test_bad_variable_names():
    with pytest.raises(ValueError):
        check_var_name("1x")
    assert check_var_name("t_1") == "t_1"


@given(mpolys())
def test_print_parse_roundtrip(p):
    assert parse(str(p)) == p


@given(mpolys())
def test_equal_polys_hash_equal(p):
    q = parse(str(p))
    assert hash(p) == hash(q)


def test_unused_generators_do_not_affect_equality():
    x, y = MPoly.var("x"), MPoly.var("y")
    assert (x + y) - y == x
    assert hash((x + y) - y) == hash(x)


# -- arithmetic against sympy ---------------------------------------------------


@settings(max_examples=60)
@given(mpolys(), mpolys())
def test_add_mul_match_sympy(p, q):
    assert same(p + q, to_sympy(p) + to_sympy(q))
    assert same(p - q, to_sympy(p) - to_sympy(q))
    assert same(p * q, to_sympy(p) * to_sympy(q))


@settings(max_examples=40)
@given(mpolys(max_terms=3), st.integers(0, 4))
def test_pow_matches_sympy(p, e):
    assert same(p**e, to_sympy(p) ** e)


@given(mpolys(), mpolys(), mpolys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p + ZERO == p
    assert p * ONE == p


def test_mp_arith_dispatch():
    x = MPoly.var("x")
    assert mp_arith("add", x, 1) == x + 1
    assert mp_arith("mul", x, x) == x * x
    assert mp_arith("neg", x) == -x
    with pytest.raises(ValueError):
        mp_arith("frobnicate", x, x)


@given(mpolys(max_terms=4), mpolys(max_terms=4))
def test_exact_division_inverts_product(p, q):
    if not q:
        return
    assert mp_exact_div(p * q, q) == p


def test_exact_division_raises_on_remainder():
    x = MPoly.var("x")
    with pytest.raises(NotDivisible):
        mp_exact_div(x + 1, x)
    with pytest.raises(ZeroDivisionError):
        mp_exact_div(x, ZERO)


def test_substitute():
    p = parse("1 - t*z")
    assert p.substitute({"z": parse("u*z")}) == parse("1 - t*u*z")
    assert p.substitute({"t": 2}) == parse("1 - 2*z")


def test_coeffs_in_and_degrees():
    p = parse("1 + t*z + 3*t^2*z^3 - u*z^3")
    assert p.degree("z") == 3
    assert p.coeff("z", 3) == parse("3*t^2 - u")
    assert p.total_degree(exclude=("z", "u")) == 2
    assert MPoly.from_coeffs_in("z", p.coeffs_in("z")) == p


# -- series -----------------------------------------------------------------------


def test_geometric_series():
    s = rational_series(ONE, parse("1 - t*z"), 5)
    assert [str(c) for c in s.coeffs] == ["1", "t", "t^2", "t^3", "t^4", "t^5"]


def test_series_graded_by_weight_degree():
    s = rational_series(ONE, parse("1 - x - y"), 3, var=None)
    assert s[2] == parse("x^2 + 2*x*y + y^2")


@settings(max_examples=40)
@given(mpolys(max_terms=4, names=("x", "y")), mpolys(max_terms=3, names=("x", "y")), st.integers(0, 6))
def test_series_times_denominator_is_numerator(num, tail, order):
    z = MPoly.var("z")
    den = ONE + tail * z
    s = rational_series(num, den, order).to_poly()
    prod = s * den
    for e, c in prod.coeffs_in("z").items():
        if e <= order:
            assert c == num.coeff("z", e)


def test_series_rejects_non_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        rational_series(ONE, parse("2 - z"), 3)
    with pytest.raises(NonUnitConstantTerm):
        rational_series(ONE, parse("1 + t - z"), 3)


# -- gcd ------------------------------------------------------------------------


def test_gcd_detects_common_factor():
    D = parse("1 + 2*t2*z + t2^2*z^2") * parse("1 - z + t1^2*z^2")
    N = parse("1 - t2^2*z^2")
    assert univariate_gcd_in(N, D, "z") == parse("1 + t2*z")


@settings(max_examples=30, deadline=None)
@given(
    mpolys(max_terms=3, max_exp=2, coeff=4, names=("x", "y")),
    mpolys(max_terms=3, max_exp=2, coeff=4, names=("x", "y")),
    mpolys(max_terms=3, max_exp=2, coeff=4, names=("x", "y")),
)
def test_gcd_matches_sympy(f, g, h):
    p, q = f * h, g * h
    if not p or not q:
        return
    ours = univariate_gcd_in(p, q, "x")
    # factors free of x are units over the fraction field; drop them
    g = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), SYMS[0])
    theirs = 1
    if g.degree() > 0:
        _, prim = sympy.Poly(g.primitive()[1].as_expr(), *SYMS).primitive()
        theirs = prim.as_expr()
    assert same(ours, theirs) or same(ours, -theirs)


def test_reduce_fraction():
    num, den = reduce_fraction(parse("1 - t2^2*z^2"), parse("1 + 2*t2*z + t2^2*z^2"))
    assert (num, den) == (parse("1 - t2*z"), parse("1 + t2*z"))
    num, den = reduce_fraction(parse("2*x"), parse("-4"))
    assert (num, den) == (parse("-x"), parse("2"))


def test_gcd_of_coprime_and_self():
    assert univariate_gcd_in(parse("1 - z + t^2*z^2"), parse("1 - t*u*z"), "z") == ONE
    p = parse("-2 - 2*t*z")
    assert univariate_gcd_in(p, p, "z") == parse("1 + t*z")
