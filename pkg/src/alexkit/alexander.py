"""Alexander matrices from crossing lists, elementary-ideal invariants,
fibre dimensions, virtual classes, ring presentations, and the
multivariable Alexander polynomial.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import (NotAUnit, UnknownGenerator, UseMultivariableRoute,
                     UseUnivariateRoute)
from .fox import AbelianWeights, fox_derivative_abelianized, reduce_word
from .laurent import (LaurentPoly, MultiLaurentPoly, canonical_poly,
                      distinct_root_count, gcd_multivariate)
from .snf import poly_det, smith_normal_form


def component_weights(d):
    """Default weights: each arc goes to the variable of its component."""
    s = d.component_count
    return AbelianWeights(
        {arc: MultiLaurentPoly.variable(comp, s)
         for arc, comp in d.components.items()}, s)


def _relator(c):
    """Wirtinger relator of a crossing: x_out = x_over^s x_in x_over^-s."""
    j, i, k = c.over, c.under_in, c.under_out
    if c.sign > 0:
        return reduce_word([(j, 1), (i, 1), (j, -1), (k, -1)])
    return reduce_word([(j, -1), (i, 1), (j, 1), (k, -1)])


class AlexanderMatrix:
    """(n-1) x n presentation matrix of the Alexander module."""

    __slots__ = ("rows", "arc_count", "variable_count")

    def __init__(self, rows, arc_count, variable_count):
        self.rows = tuple(tuple(r) for r in rows)
        self.arc_count = arc_count
        self.variable_count = variable_count

    def univariate_rows(self):
        if self.variable_count != 1:
            raise UseMultivariableRoute(
                "matrix has %d variables" % self.variable_count)
        return [[entry.to_laurent() for entry in row] for row in self.rows]

    def __repr__(self):
        return "AlexanderMatrix<%dx%d, %d vars>" % (
            len(self.rows), self.arc_count, self.variable_count)


def alexander_matrix(d, weights=None):
    """Fox-derivative rows of the Wirtinger relators, with the last
    crossing's (redundant) relation dropped."""
    if weights is None:
        weights = component_weights(d)
    for arc in range(1, d.arc_count + 1):
        if arc not in weights.assignment:
            raise UnknownGenerator("no weight for arc %d" % arc)
    for c in d.crossings:
        win = weights.weight(c.under_in)
        wout = weights.weight(c.under_out)
        if win != wout:
            raise UnknownGenerator(
                "arcs %d and %d lie on one component but carry different "
                "weights" % (c.under_in, c.under_out))
    rows = []
    for c in d.crossings[:-1]:
        w = _relator(c)
        rows.append([fox_derivative_abelianized(w, arc, weights)
                     for arc in range(1, d.arc_count + 1)])
    return AlexanderMatrix(rows, d.arc_count, weights.nvars)


class AlexanderData:
    """Delta^1..Delta^n, SNF invariant factors, and stratum counts."""

    __slots__ = ("delta_k", "invariant_factors", "strata")

    def __init__(self, delta_k, invariant_factors, strata):
        self.delta_k = tuple(delta_k)
        self.invariant_factors = tuple(invariant_factors)
        self.strata = tuple(strata)

    @property
    def delta(self):
        """Delta^1, the Alexander polynomial."""
        return self.delta_k[0]


def alexander_data(m):
    """Compute Delta^k as d1...d_{n-k} from the Smith normal form.

    Delta^k := 1 when the requested minor size is 0 (k >= n) and := 0
    when minors of that size do not exist or all vanish (split links).
    """
    rows = m.univariate_rows()
    n = m.arc_count
    nrows = len(rows)
    factors = smith_normal_form(rows)
    delta_k = []
    for k in range(1, n + 1):
        size = n - k
        if size == 0:
            delta_k.append(LaurentPoly.one())
        elif size > nrows or size > n:
            delta_k.append(LaurentPoly.zero())
        elif size <= len(factors):
            prod = LaurentPoly.one()
            for d in factors[:size]:
                prod = prod * d
            delta_k.append(canonical_poly(prod))
        else:
            delta_k.append(LaurentPoly.zero())
    strata = []
    for k in range(1, n):
        upper = delta_k[k - 1]
        lower = delta_k[k]
        if upper.is_zero or lower.is_zero:
            continue
        count = distinct_root_count(upper) - distinct_root_count(lower)
        if count:
            strata.append((k, count))
    return AlexanderData(delta_k, factors, strata)


def fibre_dimension(m, t, tol=1e-9):
    """dim of the fibre of the Alexander fibration over t: n - rank(m(t))."""
    if m.variable_count != 1:
        raise UseMultivariableRoute("fibre dimensions need a univariate matrix")
    if t == 0:
        raise NotAUnit("t = 0 is outside the fibration base")
    rows = m.univariate_rows()
    n = m.arc_count
    if isinstance(t, (complex, float)) and not isinstance(t, bool):
        if not rows:
            return n
        arr = np.array([[entry.evaluate(complex(t)) for entry in row]
                        for row in rows], dtype=complex)
        sv = np.linalg.svd(arr, compute_uv=False)
        if len(sv) == 0 or sv[0] == 0:
            return n
        rank = int(np.sum(sv > tol * sv[0]))
        return n - rank
    t = Fraction(t)
    values = [[entry.evaluate(t) for entry in row] for row in rows]
    return n - _exact_rank(values, n)


def _exact_rank(rows, ncols):
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                factor = rows[i][col] / lead
                rows[i] = [x - factor * y
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


class VirtualClassPoly:
    """Integer polynomial in the Lefschetz motive L."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {int(e): int(c) for e, c in coeffs.items() if c}

    def __eq__(self, other):
        if not isinstance(other, VirtualClassPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def render(self):
        from .laurent import _render_terms, _var_power
        return _render_terms(sorted(self.coeffs.items()),
                             lambda e: _var_power("L", e))

    def __repr__(self):
        return "VirtualClassPoly<%s>" % self.render()


def virtual_class(data):
    """[R] = L(L-1) + sum_k |S_K^k| (L^{k+1} - L)."""
    coeffs = {2: 1, 1: -1}
    for k, count in data.strata:
        coeffs[k + 1] = coeffs.get(k + 1, 0) + count
        coeffs[1] = coeffs.get(1, 0) - count
    return VirtualClassPoly(coeffs)


class RingPresentation:
    """Coordinate ring of the representation variety: generators a_1..a_n
    with one linear relation per retained crossing."""

    __slots__ = ("generator_count", "relations")

    def __init__(self, generator_count, relations):
        self.generator_count = generator_count
        self.relations = tuple(tuple(r) for r in relations)

    def render_relation(self, row):
        parts = []
        for idx, coeff in enumerate(row, start=1):
            if coeff.is_zero:
                continue
            var = "a%d" % idx
            if coeff == LaurentPoly.one():
                piece = var
            elif coeff == -LaurentPoly.one():
                piece = "-" + var
            elif coeff.is_unit():
                piece = "%s %s" % (coeff.render(), var)
            else:
                piece = "(%s) %s" % (coeff.render(), var)
            parts.append(piece)
        out = ""
        for piece in parts:
            if not out:
                out = piece
            elif piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out or "0"

    def render(self):
        lines = ["generators: %s"
                 % ", ".join("a%d" % i
                             for i in range(1, self.generator_count + 1))]
        for row in self.relations:
            lines.append("relation: %s = 0" % self.render_relation(row))
        return "\n".join(lines)


def ring_presentation(d):
    if d.component_count != 1:
        raise UseMultivariableRoute("presentation is defined for knots")
    m = alexander_matrix(d)
    return RingPresentation(m.arc_count, m.univariate_rows())


def multivariable_alexander(d):
    """Gcd of the (n-1)x(n-1) minors of the multivariable matrix."""
    if d.component_count < 2:
        raise UseUnivariateRoute("use the univariate route for knots")
    m = alexander_matrix(d)
    n = m.arc_count
    size = n - 1
    if size > len(m.rows):
        return MultiLaurentPoly.zero(m.variable_count)
    one = MultiLaurentPoly.one(m.variable_count)
    minors = []
    full = [list(r) for r in m.rows]
    for drop_col in range(n):
        sub = [[entry for j, entry in enumerate(row) if j != drop_col]
               for row in full]
        minors.append(poly_det(sub, one))
    return gcd_multivariate(minors)


def knot_delta(d):
    """Delta^1 of a crossing list through the Fox route (any component
    count; all weights set to the single variable t)."""
    s = d.component_count
    if s == 1:
        m = alexander_matrix(d)
    else:
        t = MultiLaurentPoly.variable(1, 1)
        weights = AbelianWeights(
            {arc: t for arc in range(1, d.arc_count + 1)}, 1)
        m = alexander_matrix(d, weights)
    return alexander_data(m).delta
