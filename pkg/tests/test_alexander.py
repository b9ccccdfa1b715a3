"""Fox-route invariants: Alexander matrices, elementary ideals, fibre
dimensions, virtual classes, ring presentations, multivariable route."""
import random
from fractions import Fraction

import numpy as np
import pytest

from alexkit.alexander import (AlexanderData, alexander_data,
                               alexander_matrix, component_weights,
                               fibre_dimension, knot_delta,
                               multivariable_alexander, ring_presentation,
                               virtual_class, VirtualClassPoly)
from alexkit.codes import (BraidWord, braid_closure, catalog_lookup,
                           catalog_names)
from alexkit.errors import (NotAUnit, UseMultivariableRoute,
                            UseUnivariateRoute)
from alexkit.laurent import LaurentPoly, MultiLaurentPoly, normalize_unit
from util import random_braid


def test_matrix_shape_and_row_sums():
    """Each Wirtinger row evaluates to 0 at t = 1 (abelianized relation)."""
    d = catalog_lookup("trefoil").crossing_list
    m = alexander_matrix(d)
    assert len(m.rows) == d.arc_count - 1
    for row in m.univariate_rows():
        total = sum(entry.evaluate(Fraction(1)) for entry in row)
        assert total == 0


def test_catalog_knot_deltas():
    for name in catalog_names():
        entry = catalog_lookup(name)
        got = knot_delta(entry.crossing_list)
        assert got == normalize_unit(entry.delta) \
            or (got.is_zero and entry.delta.is_zero), name


def test_delta_route_matches_braid_closure_diagram():
    rng = random.Random(41)
    for _ in range(20):
        b = random_braid(rng, max_len=6)
        d = braid_closure(b)
        p = knot_delta(d)
        assert p.is_zero or p == normalize_unit(p)


def test_trefoil_module_data():
    d = catalog_lookup("trefoil").crossing_list
    data = alexander_data(alexander_matrix(d))
    one = LaurentPoly.one()
    delta = LaurentPoly({0: 1, 1: -1, 2: 1})
    assert list(data.invariant_factors) == [one, delta]
    assert data.delta == delta
    assert data.delta_k[1] == one  # Delta^2
    assert data.strata == ((1, 2),)


def test_unknot_module_data():
    d = catalog_lookup("unknot").crossing_list
    data = alexander_data(alexander_matrix(d))
    assert data.delta == LaurentPoly.one()
    assert data.strata == ()


def test_virtual_classes():
    cases = {"unknot": {2: 1, 1: -1},
             "trefoil": {2: 3, 1: -3},
             "figure8": {2: 3, 1: -3}}
    for name, want in cases.items():
        d = catalog_lookup(name).crossing_list
        data = alexander_data(alexander_matrix(d))
        assert virtual_class(data) == VirtualClassPoly(want), name


def test_virtual_class_render():
    vc = VirtualClassPoly({2: 3, 1: -3})
    assert vc.render() == "-3 L + 3 L^2"


def test_fibre_dimension_trefoil():
    m = alexander_matrix(catalog_lookup("trefoil").crossing_list)
    assert fibre_dimension(m, Fraction(2)) == 1
    assert fibre_dimension(m, Fraction(-1)) == 1
    root = complex(0.5, np.sqrt(3) / 2)  # zero of t^2 - t + 1
    assert fibre_dimension(m, root, tol=1e-6) == 2
    with pytest.raises(NotAUnit):
        fibre_dimension(m, 0)


def test_fibre_dimension_unknot():
    m = alexander_matrix(catalog_lookup("unknot").crossing_list)
    assert fibre_dimension(m, Fraction(5)) == 1


def test_ring_presentation():
    d = catalog_lookup("trefoil").crossing_list
    pres = ring_presentation(d)
    assert pres.generator_count == 3
    assert len(pres.relations) == 2
    text = pres.render()
    assert text.startswith("generators: a1, a2, a3")
    assert "relation:" in text
    with pytest.raises(UseMultivariableRoute):
        ring_presentation(catalog_lookup("hopf").crossing_list)


def test_multivariable_hopf():
    d = catalog_lookup("hopf").crossing_list
    mv = multivariable_alexander(d)
    assert mv == MultiLaurentPoly.one(2)
    with pytest.raises(UseUnivariateRoute):
        multivariable_alexander(catalog_lookup("trefoil").crossing_list)


def test_multivariable_unlink_is_zero():
    d = braid_closure(BraidWord(2))
    assert multivariable_alexander(d).is_zero
    assert knot_delta(d).is_zero


def test_solomon_link_delta():
    d = catalog_lookup("solomon").crossing_list
    assert d.component_count == 2
    got = knot_delta(d)
    assert got == normalize_unit(LaurentPoly({0: 1, 1: -1, 2: 1, 3: -1}))


def test_component_weights_shape():
    d = catalog_lookup("hopf").crossing_list
    w = component_weights(d)
    assert w.nvars == 2
    assert w.weight(1) == MultiLaurentPoly.variable(1, 2)
    assert w.weight(2) == MultiLaurentPoly.variable(2, 2)


def test_knot_sanity_properties():
    """Delta(1) = +-1 and Delta(t) = Delta(1/t) up to units, for knots."""
    rng = random.Random(53)
    checked = 0
    while checked < 15:
        b = random_braid(rng, max_len=7)
        if b.component_count() != 1:
            continue
        checked += 1
        p = knot_delta(braid_closure(b))
        assert abs(p.evaluate(Fraction(1))) == 1
        mirror = LaurentPoly({-e: c for e, c in p.coeffs.items()})
        assert normalize_unit(mirror) == p
