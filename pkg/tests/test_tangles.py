"""Tangle DSL parsing and span-valued evaluation: category laws,
Reidemeister equivalences, and the global linear-system route."""
import cmath
import random

import pytest

from alexkit.codes import BraidWord, catalog_lookup
from alexkit.errors import BoundaryMismatch, DimensionMismatch, ParseError
from alexkit.fields import ComplexPoint, GenericTField, RationalPoint
from alexkit.laurent import normalize_unit
from alexkit.tangles import (Compose, Gen, Tensor, braid_closure_expr,
                             braid_expr, closed_tangle_delta, compose_spans,
                             evaluate_tangle, parse_tangle,
                             spans_equivalent, tangle_linear_system,
                             tangle_system, tensor_spans)
from util import random_tangle_expr

FIELDS = [GenericTField(), RationalPoint(2), RationalPoint(-3),
          ComplexPoint(cmath.exp(2j * cmath.pi / 5))]


def test_parse_shapes():
    e = parse_tangle("xp ; xm")
    assert isinstance(e, Compose)
    assert e.source == ("+", "+") and e.target == ("+", "+")
    e = parse_tangle("(coev-+ # id+) ; (id- # xp)")
    assert e.source == ("+",) and e.target == ("-", "+", "+")
    assert parse_tangle(e.render()).render() == e.render()


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_tangle("bogus")
    with pytest.raises(ParseError):
        parse_tangle("(xp ; xm")
    with pytest.raises(ParseError):
        parse_tangle("xp xp")
    with pytest.raises(BoundaryMismatch):
        parse_tangle("xp ; id+")
    with pytest.raises(BoundaryMismatch):
        parse_tangle("ev+- ; ev-+")


def test_generator_span_dims():
    from alexkit.tangles import GENERATOR_TYPES
    f = GenericTField()
    for name, (src, tgt) in GENERATOR_TYPES.items():
        s = evaluate_tangle(Gen(name), f)
        assert (s.src_dim, s.tgt_dim) == (len(src), len(tgt)), name


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.describe())
def test_reidemeister_and_snake(field):
    pairs = [
        ("xp ; xm", "id+ # id+"),                      # R2
        ("xm ; xp", "id+ # id+"),                      # R2
        ("(xp # id+) ; (id+ # xp) ; (xp # id+)",
         "(id+ # xp) ; (xp # id+) ; (id+ # xp)"),      # R3
        ("(coev+- # id+) ; (id+ # ev-+)", "id+"),      # snake
        ("(id+ # coev-+) ; (ev+- # id+)", "id+"),      # snake
    ]
    for left, right in pairs:
        a = evaluate_tangle(parse_tangle(left), field)
        b = evaluate_tangle(parse_tangle(right), field)
        assert spans_equivalent(a, b), (left, right, field.describe())


def test_span_equivalence_discriminates():
    f = GenericTField()
    ev = evaluate_tangle(parse_tangle("ev+-"), f)
    cup_cap = evaluate_tangle(parse_tangle("coev+- ; ev+-"), f)
    other_circle = evaluate_tangle(parse_tangle("coev-+ ; ev-+"), f)
    circle2 = evaluate_tangle(
        parse_tangle("(coev+- # coev+-) ; (ev+- # ev+-)"), f)
    assert not spans_equivalent(cup_cap, circle2)  # mid dims 1 vs 2
    assert spans_equivalent(cup_cap, other_circle)
    with pytest.raises(DimensionMismatch):
        spans_equivalent(ev, cup_cap)


def test_category_laws_random():
    rng = random.Random(61)
    f = RationalPoint(3)
    for _ in range(10):
        e = random_tangle_expr(rng)
        s = evaluate_tangle(e, f)
        # identity laws
        ids_src = [Gen("id+" if x == "+" else "id-") for x in e.source]
        if ids_src:
            chain = ids_src[0]
            for g in ids_src[1:]:
                chain = Tensor(chain, g)
            pre = evaluate_tangle(Compose(chain, e), f)
            assert spans_equivalent(pre, s)
        # monoidality: tensor of evaluations equals evaluation of tensor
        t1 = tensor_spans(s, s)
        t2 = evaluate_tangle(Tensor(e, e), f)
        assert spans_equivalent(t1, t2)


def test_compose_associativity():
    f = GenericTField()
    a = parse_tangle("coev-+")
    mid = parse_tangle("id- # id+")
    left = compose_spans(compose_spans(evaluate_tangle(a, f),
                                       evaluate_tangle(mid, f)),
                         evaluate_tangle(mid, f))
    right = compose_spans(evaluate_tangle(a, f),
                          compose_spans(evaluate_tangle(mid, f),
                                        evaluate_tangle(mid, f)))
    assert spans_equivalent(left, right)


@pytest.mark.parametrize("field", FIELDS[:3], ids=lambda f: f.describe())
def test_two_routes_agree_random(field):
    rng = random.Random(67)
    for _ in range(12):
        e = random_tangle_expr(rng)
        assert spans_equivalent(evaluate_tangle(e, field),
                                tangle_linear_system(e, field)), e.render()


def test_closed_trefoil_mid_dims():
    expr = braid_closure_expr(BraidWord(2, [1, 1, 1]))
    assert evaluate_tangle(expr, GenericTField()).mid_dim == 1
    root = ComplexPoint(cmath.exp(1j * cmath.pi / 3))  # zero of t^2-t+1
    assert evaluate_tangle(expr, root).mid_dim == 2


def test_closed_tangle_delta_catalog():
    for name in ("unknot", "trefoil", "figure8", "hopf"):
        entry = catalog_lookup(name)
        got = closed_tangle_delta(braid_closure_expr(entry.braid))
        assert got == normalize_unit(entry.delta), name
    with pytest.raises(DimensionMismatch):
        closed_tangle_delta(parse_tangle("xp"))


def test_unlink_mid_dim_and_delta():
    expr = braid_closure_expr(BraidWord(2))
    assert evaluate_tangle(expr, GenericTField()).mid_dim == 2
    assert closed_tangle_delta(expr).is_zero


def test_tangle_system_circles():
    sys0 = tangle_system(parse_tangle("coev+- ; ev+-"))
    assert sys0.circle_count() == 1
    sys2 = tangle_system(braid_closure_expr(BraidWord(2)))
    assert sys2.circle_count() == 2


def test_braid_expr_boundaries():
    b = BraidWord(3, [1, -2])
    e = braid_expr(b)
    assert e.source == ("+",) * 3 and e.target == ("+",) * 3
    closed = braid_closure_expr(b)
    assert closed.source == () and closed.target == ()
