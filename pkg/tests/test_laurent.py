"""Exact Laurent arithmetic against sympy oracles and algebraic laws."""
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from alexkit.errors import NotAUnit, ZeroPolynomial
from alexkit.laurent import (LaurentPoly, MultiLaurentPoly,
                             RationalFunction, canonical_poly,
                             distinct_root_count, divmod_laurent, exact_div,
                             gcd_laurent, gcd_multivariate, normalize_unit)

_t = sympy.symbols("t")


def to_sympy(p):
    return sum(sympy.Rational(c.numerator, c.denominator) * _t ** e
               for e, c in p.coeffs.items())


def poly_strategy(min_exp=-3, max_exp=4):
    return st.dictionaries(
        st.integers(min_exp, max_exp),
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        max_size=5).map(LaurentPoly)


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert a - a == LaurentPoly.zero()


@given(poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_mul_matches_sympy(a, b):
    assert sympy.simplify(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_divmod_is_division_with_remainder(a, b):
    if b.is_zero:
        with pytest.raises(ZeroDivisionError):
            divmod_laurent(a, b)
        return
    q, r = divmod_laurent(a, b)
    assert a == q * b + r
    assert r.is_zero or r.spread < b.spread


@given(poly_strategy(), poly_strategy())
@settings(max_examples=60, deadline=None)
def test_gcd_matches_sympy(a, b):
    g = gcd_laurent(a, b)
    if a.is_zero and b.is_zero:
        assert g.is_zero
        return
    # compare monic ordinary-polynomial representatives
    sa = sympy.Poly(to_sympy(a.shifted(-a.min_exp)) if not a.is_zero else 0,
                    _t)
    sb = sympy.Poly(to_sympy(b.shifted(-b.min_exp)) if not b.is_zero else 0,
                    _t)
    expected = sympy.gcd(sa, sb).monic()
    got = sympy.Poly(to_sympy(normalize_unit(g)), _t).monic()
    assert got == expected
    # and the gcd really divides both
    if not a.is_zero:
        exact_div(a, g)
    if not b.is_zero:
        exact_div(b, g)


def test_normalize_unit_canonical():
    p = LaurentPoly({-2: Fraction(-3), -1: Fraction(3), 0: Fraction(-3)})
    q = normalize_unit(p)
    assert q.min_exp == 0
    assert q.coeffs[0] > 0
    # associates normalize identically
    for k in (-2, 0, 3):
        for s in (1, -1):
            assert normalize_unit(p * LaurentPoly.monomial(k, s)) == q
    with pytest.raises(ZeroPolynomial):
        normalize_unit(LaurentPoly.zero())


def test_canonical_poly_is_primitive_integer():
    p = LaurentPoly({1: Fraction(2, 3), 2: Fraction(-4, 3)})
    q = canonical_poly(p)
    assert q == LaurentPoly({0: 1, 1: -2})
    # rational scalings are units and collapse to one representative
    assert canonical_poly(p * Fraction(7, 5)) == q


def test_distinct_root_count():
    t = LaurentPoly.t()
    one = LaurentPoly.one()
    assert distinct_root_count(one) == 0
    assert distinct_root_count((t - one) ** 3) == 1
    assert distinct_root_count((t - one) ** 2 * (t + one)) == 2
    assert distinct_root_count(t ** 5) == 0  # 0 is not in the base C*


def test_evaluate_points():
    p = LaurentPoly({-1: Fraction(1), 1: Fraction(2)})
    assert p.evaluate(Fraction(2)) == Fraction(1, 2) + 4
    assert abs(p.evaluate(1j) - (1j ** -1 + 2j)) < 1e-12
    with pytest.raises(NotAUnit):
        p.evaluate(Fraction(0))


@given(poly_strategy(), poly_strategy(min_exp=0, max_exp=2),
       poly_strategy(), poly_strategy(min_exp=0, max_exp=2))
@settings(max_examples=40, deadline=None)
def test_rational_function_field_laws(an, ad, bn, bd):
    if ad.is_zero or bd.is_zero:
        return
    a = RationalFunction(an, ad)
    b = RationalFunction(bn, bd)
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == RationalFunction.zero()
    if not b.is_zero:
        assert (a / b) * b == a
    assert a * RationalFunction.one() == a


def test_rational_function_reduces():
    t = LaurentPoly.t()
    one = LaurentPoly.one()
    r = RationalFunction((t - one) * (t + one), t - one)
    assert r == RationalFunction(t + one)


def test_multivariable_roundtrip_and_collapse():
    t1 = MultiLaurentPoly.variable(1, 2)
    t2 = MultiLaurentPoly.variable(2, 2)
    p = t1 * t2 - t2 * t2 + MultiLaurentPoly.one(2)
    assert p.set_all_equal() == LaurentPoly({0: 1})  # t^2 - t^2 + 1
    q = MultiLaurentPoly.variable(1, 1)
    assert q.to_laurent() == LaurentPoly.t()
    assert MultiLaurentPoly.from_laurent(LaurentPoly.t()) == q


def test_gcd_multivariate_matches_sympy():
    x, y = sympy.symbols("x y")
    rng = random.Random(11)
    for _ in range(15):
        g = _random_mv(rng)
        a = g * _random_mv(rng)
        b = g * _random_mv(rng)
        got = gcd_multivariate([a, b])
        sg = sympy.gcd(_mv_to_sympy(a, x, y), _mv_to_sympy(b, x, y))
        # gcds agree up to units +-x^a y^b of the Laurent ring
        want = _mv_unit_norm(sg, x, y)
        got_s = _mv_unit_norm(_mv_to_sympy(got, x, y), x, y)
        assert got_s == want


def _random_mv(rng):
    coeffs = {}
    for _ in range(rng.randint(1, 3)):
        exps = (rng.randint(0, 2), rng.randint(0, 2))
        coeffs[exps] = Fraction(rng.choice([-2, -1, 1, 2]))
    return MultiLaurentPoly(coeffs, 2)


def _mv_unit_norm(expr, x, y):
    p = sympy.Poly(sympy.expand(expr), x, y)
    monoms = p.monoms()
    shift = x ** -min(m[0] for m in monoms) * y ** -min(m[1] for m in monoms)
    out = sympy.expand(p.as_expr() * shift)
    lead = sympy.Poly(out, x, y).coeffs()[0]
    return sympy.expand(out / abs(lead) * (1 if lead > 0 else -1))


def _mv_to_sympy(p, x, y):
    return sum(sympy.Rational(c.numerator, c.denominator)
               * x ** e[0] * y ** e[1] for e, c in p.coeffs.items())
