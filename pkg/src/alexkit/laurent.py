"""Exact Laurent-polynomial arithmetic over the rationals.

Univariate polynomials live in Q[t, t^-1], multivariate ones in
Q[t1^{+-1}, ..., ts^{+-1}].  Coefficients are `fractions.Fraction`;
the zero polynomial is the empty coefficient map.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import NotAUnit, ZeroPolynomial


def _lcm(a, b):
    return a * b // _int_gcd(a, b)


class LaurentPoly:
    """Laurent polynomial in t, stored as {exponent: Fraction}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                c = Fraction(c)
                if c:
                    data[int(e)] = c
        self.coeffs = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def min_exp(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return min(self.coeffs)

    @property
    def max_exp(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return max(self.coeffs)

    @property
    def spread(self):
        return self.max_exp - self.min_exp

    def is_unit(self):
        """True iff p = c * t^k with c != 0 (a unit of Q[t, t^-1])."""
        return len(self.coeffs) == 1

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == LaurentPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        out = LaurentPoly()
        out.coeffs = data
        return out

    def __neg__(self):
        out = LaurentPoly()
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        data = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        out = LaurentPoly()
        out.coeffs = data
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (e, c), = self.coeffs.items()
            return LaurentPoly({e * n: Fraction(1) / c ** (-n)})
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, k):
        """Multiply by t^k."""
        out = LaurentPoly()
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def derivative(self):
        out = LaurentPoly()
        out.coeffs = {e - 1: c * e for e, c in self.coeffs.items() if e != 0}
        return out

    def evaluate(self, x):
        """Evaluate at x != 0; exact for Fraction/int x, float for complex x."""
        if x == 0:
            raise NotAUnit("cannot evaluate a Laurent polynomial at t = 0")
        if isinstance(x, (complex, float)):
            x = complex(x)
            return sum((float(c) * x ** e for e, c in self.coeffs.items()),
                       0j)
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.coeffs.items()), Fraction(0))

    def render(self):
        return _render_terms(sorted(self.coeffs.items()),
                             lambda e: _var_power("t", e))

    def __repr__(self):
        return "LaurentPoly<%s>" % self.render()


def _var_power(name, e):
    if e == 0:
        return ""
    if e == 1:
        return name
    return "%s^%d" % (name, e)


def _render_terms(terms, varpart):
    """Shared text rendering: terms in increasing exponent order."""
    if not terms:
        return "0"
    pieces = []
    for e, c in terms:
        v = varpart(e)
        mag = abs(c)
        if not v:
            body = str(mag)
        elif mag == 1:
            body = v
        else:
            body = "%s %s" % (mag, v)
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+ " if c > 0 else "- ") + body)
    return " ".join(pieces)


def arith(a, b, op):
    """Ring operation dispatch: op in {add, sub, mul}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown op %r" % (op,))


def normalize_unit(p):
    """Multiply by +-t^k so the minimum exponent is 0 and the constant
    term is positive."""
    if p.is_zero:
        raise ZeroPolynomial("normalize_unit of the zero polynomial")
    q = p.shifted(-p.min_exp)
    if q.coeffs[0] < 0:
        q = -q
    return q


def canonical_poly(p):
    """Canonical associate: normalize_unit plus scaling to coprime integer
    coefficients.  Units of Q[t,t^-1] are c*t^k, so gcds and SNF invariant
    factors need the scalar pinned as well as the sign and shift."""
    if p.is_zero:
        return LaurentPoly.zero()
    q = normalize_unit(p)
    den = 1
    num = 0
    for c in q.coeffs.values():
        den = _lcm(den, c.denominator)
        num = _int_gcd(num, c.numerator)
    scale = Fraction(den, num)
    out = LaurentPoly()
    out.coeffs = {e: c * scale for e, c in q.coeffs.items()}
    return out


def divmod_laurent(a, b):
    """Division with remainder: a = q*b + r with spread(r) < spread(b).

    Works in Q[t,t^-1] by shifting both operands to ordinary polynomials
    with nonzero constant term and doing classical long division.
    """
    if b.is_zero:
        raise ZeroDivisionError("Laurent division by zero")
    if a.is_zero:
        return LaurentPoly.zero(), LaurentPoly.zero()
    sa, sb = a.min_exp, b.min_exp
    rem = {e - sa: c for e, c in a.coeffs.items()}
    bshift = {e - sb: c for e, c in b.coeffs.items()}
    db = max(bshift)
    lead = bshift[db]
    q = {}
    while rem and max(rem) >= db:
        dr = max(rem)
        factor = rem[dr] / lead
        q[dr - db] = factor
        for e, c in bshift.items():
            ne = dr - db + e
            nc = rem.get(ne, Fraction(0)) - factor * c
            if nc:
                rem[ne] = nc
            else:
                rem.pop(ne, None)
    quo = LaurentPoly()
    quo.coeffs = {e + sa - sb: c for e, c in q.items()}
    r = LaurentPoly()
    r.coeffs = {e + sa: c for e, c in rem.items()}
    return quo, r


def exact_div(a, b):
    q, r = divmod_laurent(a, b)
    if not r.is_zero:
        raise ValueError("inexact Laurent division: %s by %s"
                         % (a.render(), b.render()))
    return q


def gcd_laurent(a, b):
    """Canonical gcd in Q[t,t^-1]; gcd(0,0) = 0 by convention."""
    if a.is_zero and b.is_zero:
        return LaurentPoly.zero()
    while not b.is_zero:
        _, r = divmod_laurent(a, b)
        a, b = b, r
    return canonical_poly(a)


def distinct_root_count(p):
    """Number of distinct roots of p in C^* (degree of the square-free part)."""
    if p.is_zero:
        raise ZeroPolynomial("distinct_root_count of the zero polynomial")
    u = p.shifted(-p.min_exp)
    if u.max_exp == 0:
        return 0
    g = gcd_laurent(u, u.derivative())
    sf = exact_div(u, g)
    return sf.max_exp - sf.min_exp


def evaluate(p, x):
    """Module-level evaluation entry point (t must be invertible)."""
    return p.evaluate(x)


class RationalFunction:
    """Reduced fraction of Laurent polynomials; the generic-t scalar field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        if den.coeffs == {0: Fraction(1)}:
            self.num = num
            self.den = den
            return
        g = gcd_laurent(num, den)
        num = exact_div(num, g)
        den = exact_div(den, g)
        canon = canonical_poly(den)
        unit = exact_div(canon, den)
        self.num = num * unit
        self.den = canon

    @classmethod
    def from_laurent(cls, p):
        return cls(p)

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @classmethod
    def t(cls):
        return cls(LaurentPoly.t())

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _den_is_one(self):
        return self.den.coeffs == {0: Fraction(1)}

    def __add__(self, other):
        if self._den_is_one() and other._den_is_one():
            return RationalFunction(self.num + other.num)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        if self._den_is_one() and other._den_is_one():
            return RationalFunction(self.num - other.num)
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        out = RationalFunction.zero()
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return RationalFunction.zero()
        if self._den_is_one() and other._den_is_one():
            return RationalFunction(self.num * other.num)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def render(self):
        if self.den == LaurentPoly.one():
            return self.num.render()
        return "(%s) / (%s)" % (self.num.render(), self.den.render())

    def __repr__(self):
        return "RationalFunction<%s>" % self.render()


class MultiLaurentPoly:
    """Laurent polynomial in t1..ts, stored as {exponent tuple: Fraction}."""

    __slots__ = ("coeffs", "nvars")

    def __init__(self, coeffs=None, nvars=1):
        data = {}
        if coeffs:
            for exps, c in coeffs.items():
                c = Fraction(c)
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError("exponent vector of wrong length")
                if c:
                    data[exps] = c
        self.coeffs = data
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars):
        return cls(None, nvars)

    @classmethod
    def one(cls, nvars):
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars):
        """The variable t_i (1-based)."""
        exps = [0] * nvars
        exps[i - 1] = 1
        return cls({tuple(exps): 1}, nvars)

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        return cls({exps: coeff}, len(exps))

    @classmethod
    def from_laurent(cls, p):
        return cls({(e,): c for e, c in p.coeffs.items()}, 1)

    def to_laurent(self):
        if self.nvars != 1:
            raise ValueError("not univariate")
        return LaurentPoly({e: c for (e,), c in self.coeffs.items()})

    def set_all_equal(self):
        """Substitute every variable by the single variable t."""
        out = LaurentPoly()
        data = {}
        for exps, c in self.coeffs.items():
            e = sum(exps)
            s = data.get(e, 0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        out.coeffs = data
        return out

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_single_term(self):
        return len(self.coeffs) == 1

    def term_inverse(self):
        """Inverse of a single-term (unit) polynomial."""
        if not self.is_single_term():
            raise ValueError("not a unit monomial")
        (exps, c), = self.coeffs.items()
        return MultiLaurentPoly({tuple(-e for e in exps): Fraction(1) / c},
                                self.nvars)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __eq__(self, other):
        if isinstance(other, MultiLaurentPoly):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == MultiLaurentPoly.constant(
                other, self.nvars).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check(other)
        data = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            s = data.get(exps, 0) + c
            if s:
                data[exps] = s
            else:
                data.pop(exps, None)
        out = MultiLaurentPoly.zero(self.nvars)
        out.coeffs = data
        return out

    def __neg__(self):
        out = MultiLaurentPoly.zero(self.nvars)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiLaurentPoly.constant(other, self.nvars)
        self._check(other)
        data = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = data.get(e, 0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        out = MultiLaurentPoly.zero(self.nvars)
        out.coeffs = data
        return out

    __rmul__ = __mul__

    def min_exps(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no exponents")
        return tuple(min(e[i] for e in self.coeffs)
                     for i in range(self.nvars))

    def shifted(self, shifts):
        out = MultiLaurentPoly.zero(self.nvars)
        out.coeffs = {tuple(x + s for x, s in zip(e, shifts)): c
                      for e, c in self.coeffs.items()}
        return out

    def render(self):
        def varpart(exps):
            parts = [_var_power("t%d" % (i + 1), e)
                     for i, e in enumerate(exps) if e != 0]
            return " ".join(parts)
        return _render_terms(sorted(self.coeffs.items()), varpart)

    def __repr__(self):
        return "MultiLaurentPoly<%s>" % self.render()


def mv_normalize(p):
    """Canonical associate in Q[t1^{+-1},..,ts^{+-1}]: every variable's
    minimum exponent 0, coprime integer coefficients, lexicographically
    leading coefficient positive."""
    if p.is_zero:
        return MultiLaurentPoly.zero(p.nvars)
    q = p.shifted(tuple(-m for m in p.min_exps()))
    den = 1
    num = 0
    for c in q.coeffs.values():
        den = _lcm(den, c.denominator)
        num = _int_gcd(num, c.numerator)
    scale = Fraction(den, num)
    if q.coeffs[max(q.coeffs)] < 0:
        scale = -scale
    out = MultiLaurentPoly.zero(p.nvars)
    out.coeffs = {e: c * scale for e, c in q.coeffs.items()}
    return out


def _mv_split_last(p):
    """View p as a polynomial in its last variable with coefficients in
    one fewer variable: {exponent: MultiLaurentPoly(nvars-1)}."""
    out = {}
    for exps, c in p.coeffs.items():
        head, last = exps[:-1], exps[-1]
        out.setdefault(last, {})[head] = c
    return {e: MultiLaurentPoly(d, p.nvars - 1) for e, d in out.items()}


def _mv_join_last(parts, nvars):
    data = {}
    for e, coeff in parts.items():
        for head, c in coeff.coeffs.items():
            data[head + (e,)] = c
    return MultiLaurentPoly(data, nvars)


def mv_exact_div(p, d):
    """Exact division in the multivariate Laurent ring (raises if inexact)."""
    if p.is_zero:
        return MultiLaurentPoly.zero(p.nvars)
    if d.is_zero:
        raise ZeroDivisionError("multivariate division by zero")
    if p.nvars == 1:
        return MultiLaurentPoly.from_laurent(
            exact_div(p.to_laurent(), d.to_laurent()))
    num = _mv_split_last(p)
    den = _mv_split_last(d)
    dd = max(den)
    lead = den[dd]
    quo = {}
    while num:
        dp = max(num)
        if dp < dd:
            raise ValueError("inexact multivariate division")
        qc = mv_exact_div(num[dp], lead)
        quo[dp - dd] = qc
        for e, c in den.items():
            ne = dp - dd + e
            cur = num.get(ne, MultiLaurentPoly.zero(p.nvars - 1)) - qc * c
            if cur.is_zero:
                num.pop(ne, None)
            else:
                num[ne] = cur
    return _mv_join_last(quo, p.nvars)


def _mv_content(parts, nvars_inner):
    """Gcd of the coefficient polynomials of a split representation."""
    g = MultiLaurentPoly.zero(nvars_inner)
    for coeff in parts.values():
        g = _mv_gcd(g, coeff) if not g.is_zero else mv_normalize(coeff)
    return g


def _mv_scale_div(parts, content):
    return {e: mv_exact_div(c, content) for e, c in parts.items()}


def _mv_pseudo_rem(a, b, nvars):
    """Pseudo-remainder of a by b as polynomials in the last variable."""
    da, db = max(a), max(b)
    lead_b = b[db]
    rem = dict(a)
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lead_r = rem[dr]
        new = {}
        for e, c in rem.items():
            if e == dr:
                continue
            new[e] = c * lead_b
        for e, c in b.items():
            if e == db:
                continue
            ne = dr - db + e
            cur = new.get(ne, MultiLaurentPoly.zero(nvars - 1)) - lead_r * c
            if cur.is_zero:
                new.pop(ne, None)
            else:
                new[ne] = cur
        rem = new
    return rem


def _mv_primitive(parts, nvars):
    if not parts:
        return parts
    content = _mv_content(parts, nvars - 1)
    return _mv_scale_div(parts, content)


def _mv_gcd(a, b):
    """Gcd of two nonzero multivariate Laurent polynomials."""
    a = mv_normalize(a)
    b = mv_normalize(b)
    if a.nvars == 1:
        return MultiLaurentPoly.from_laurent(
            gcd_laurent(a.to_laurent(), b.to_laurent()))
    nvars = a.nvars
    pa = _mv_split_last(a)
    pb = _mv_split_last(b)
    ca = _mv_content(pa, nvars - 1)
    cb = _mv_content(pb, nvars - 1)
    content = _mv_gcd(ca, cb)
    pa = _mv_scale_div(pa, ca)
    pb = _mv_scale_div(pb, cb)
    # primitive pseudo-remainder sequence in the last variable
    while pb:
        r = _mv_pseudo_rem(pa, pb, nvars)
        pa, pb = pb, _mv_primitive(r, nvars)
    lifted = MultiLaurentPoly(
        {e + (0,): c for e, c in content.coeffs.items()}, nvars)
    return mv_normalize(lifted * _mv_join_last(pa, nvars))


def gcd_multivariate(polys):
    """Gcd of a non-empty list; all-zero input returns 0."""
    polys = list(polys)
    if not polys:
        raise ValueError("gcd_multivariate of an empty list")
    nvars = polys[0].nvars
    for p in polys:
        if p.nvars != nvars:
            raise ValueError("variable count mismatch")
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return MultiLaurentPoly.zero(nvars)
    g = mv_normalize(nonzero[0])
    for p in nonzero[1:]:
        if g == MultiLaurentPoly.one(nvars):
            break
        g = _mv_gcd(g, p)
    return g
