"""Command-line front end: `alexkit <verb> [--format F] [--t T] [--json]
[--file P | <inline input>]`.

Exit codes: 0 success, 2 parse/validation errors, 3 domain errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import burau as burau_mod
from .alexander import (alexander_data, alexander_matrix, fibre_dimension,
                        knot_delta, multivariable_alexander,
                        ring_presentation, virtual_class)
from .codes import (braid_closure, catalog_lookup, catalog_names,
                    parse_braid, parse_crossing_list, parse_pd)
from .errors import (AlexkitError, AmbiguousOrientation, BoundaryMismatch,
                     DimensionMismatch, EmptyMatrix, NotAUnit, NotFound,
                     ParseError, UnknownGenerator, UseMultivariableRoute,
                     UseUnivariateRoute, ValidationError, ZeroPolynomial)
from .fields import ComplexPoint, GenericTField, RationalPoint
from .laurent import LaurentPoly, normalize_unit
from .tangles import (braid_closure_expr, closed_tangle_delta,
                      evaluate_tangle, parse_tangle)

_PARSE_ERRORS = (ParseError, ValidationError, AmbiguousOrientation,
                 BoundaryMismatch, NotFound)
_DOMAIN_ERRORS = (NotAUnit, ZeroPolynomial, UnknownGenerator,
                  UseMultivariableRoute, UseUnivariateRoute,
                  DimensionMismatch, EmptyMatrix)

_COMPLEX_RE = re.compile(
    r"([+-]?[0-9]+(?:\.[0-9]+)?)([+-][0-9]+(?:\.[0-9]+)?)i")

_VERBS = ("alexander", "burau", "fiber", "strata", "virtual-class",
          "module", "ring", "span", "closure", "catalog", "selftest")

_DIAGRAM_FORMATS = ("braid", "xcode", "pd")


def parse_t_spec(text):
    """"generic" | rational "p/q" | complex "a+bi"."""
    text = text.strip()
    if text == "generic":
        return GenericTField()
    m = _COMPLEX_RE.fullmatch(text)
    if m:
        return ComplexPoint(complex(float(m.group(1)), float(m.group(2))))
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError("cannot parse t-spec %r" % text)
    return RationalPoint(value)


def _load_diagram(fmt, text):
    if fmt == "braid":
        return braid_closure(parse_braid(text))
    if fmt == "xcode":
        return parse_crossing_list(text)
    if fmt == "pd":
        return parse_pd(text)
    raise ParseError("format %r does not describe a diagram" % fmt)


def _poly_json(p):
    return {
        "coeffs": [[e, c.numerator, c.denominator]
                   for e, c in sorted(p.coeffs.items())],
        "pretty": p.render(),
    }


def _mv_poly_json(p):
    return {
        "coeffs": [[list(exps), c.numerator, c.denominator]
                   for exps, c in sorted(p.coeffs.items())],
        "pretty": p.render(),
    }


def _delta_result(verb, text, fmt):
    diagram = _load_diagram(fmt, text)
    if diagram.component_count == 1:
        delta = knot_delta(diagram)
        return {"verb": verb, "input": text, "delta": _poly_json(delta)}, \
            delta.render()
    mv = multivariable_alexander(diagram)
    return {"verb": verb, "input": text, "delta": _mv_poly_json(mv)}, \
        mv.render()


def _run_verb(verb, text, fmt, field, tol):
    """Returns (json_object, text_output)."""
    if verb == "alexander":
        return _delta_result(verb, text, fmt)

    if verb == "closure":
        delta = burau_mod.closure_alexander(parse_braid(text))
        return {"verb": verb, "input": text,
                "delta": _poly_json(delta)}, delta.render()

    if verb == "burau":
        m = burau_mod.burau_unreduced(parse_braid(text))
        pretty = [[entry.render() for entry in row] for row in m.rows]
        obj = {"verb": verb, "input": text,
               "matrix": [[_poly_json(entry)["coeffs"] for entry in row]
                          for row in m.rows]}
        return obj, "\n".join("[%s]" % ", ".join(row) for row in pretty)

    if verb == "fiber":
        diagram = _load_diagram(fmt, text)
        m = alexander_matrix(diagram)
        if isinstance(field, GenericTField):
            from .fields import Mat, mat_rank
            from .laurent import RationalFunction
            rows = [[RationalFunction(entry.to_laurent())
                     for entry in row] for row in m.rows]
            rank = mat_rank(field, Mat(rows, m.arc_count))
            dim = m.arc_count - rank
        elif isinstance(field, RationalPoint):
            dim = fibre_dimension(m, field.t)
        else:
            dim = fibre_dimension(m, field.t, tol=field.tol)
        return {"verb": verb, "input": text, "fiber_dim": dim}, str(dim)

    if verb in ("strata", "virtual-class", "module"):
        diagram = _load_diagram(fmt, text)
        if diagram.component_count != 1:
            raise UseMultivariableRoute("verb %r needs a knot" % verb)
        data = alexander_data(alexander_matrix(diagram))
        if verb == "strata":
            obj = {"verb": verb, "input": text,
                   "strata": [[k, c] for k, c in data.strata]}
            lines = ["S^%d = %d" % (k, c) for k, c in data.strata]
            return obj, "\n".join(lines) if lines else "none"
        if verb == "virtual-class":
            vc = virtual_class(data)
            obj = {"verb": verb, "input": text,
                   "virtual_class": [[e, c]
                                     for e, c in sorted(vc.coeffs.items())]}
            return obj, vc.render()
        obj = {"verb": verb, "input": text,
               "delta_k": [_poly_json(p) for p in data.delta_k],
               "invariant_factors": [_poly_json(p)
                                     for p in data.invariant_factors]}
        lines = ["d%d = %s" % (i, p.render())
                 for i, p in enumerate(data.invariant_factors, start=1)]
        return obj, "\n".join(lines) if lines else "none"

    if verb == "ring":
        diagram = _load_diagram(fmt, text)
        pres = ring_presentation(diagram)
        obj = {"verb": verb, "input": text,
               "generators": pres.generator_count,
               "relations": [pres.render_relation(row)
                             for row in pres.relations]}
        return obj, pres.render()

    if verb == "span":
        if fmt == "dsl":
            span = evaluate_tangle(parse_tangle(text), field)
        elif fmt == "braid":
            b = parse_braid(text)
            m = burau_mod.burau_unreduced(b)
            from .fields import Mat, mat_identity
            rows = [[field.from_laurent(entry) for entry in row]
                    for row in m.rows]
            from .tangles import Span
            span = Span(field, b.strands, b.strands, b.strands,
                        mat_identity(field, b.strands),
                        Mat(rows, b.strands))
        else:
            raise ParseError("span needs --format dsl or braid")
        obj = {"verb": verb, "input": text,
               "span": {"src": span.src_dim, "mid": span.mid_dim,
                        "tgt": span.tgt_dim}}
        return obj, "src=%d mid=%d tgt=%d" % (span.src_dim, span.mid_dim,
                                              span.tgt_dim)

    if verb == "catalog":
        names = [text] if text else catalog_names()
        entries = [catalog_lookup(n) for n in names]
        obj = {"verb": verb, "input": text or "",
               "entries": [{"name": e.name, "braid": e.braid.render(),
                            "delta": _poly_json(e.delta)}
                           for e in entries]}
        lines = ["%s: braid=%s delta=%s"
                 % (e.name, e.braid.render(), e.delta.render())
                 for e in entries]
        return obj, "\n".join(lines)

    raise ParseError("unknown verb %r" % verb)


def selftest_report(names=None):
    """Cross-route consistency over the catalog; returns (lines, ok)."""
    if names is None:
        names = catalog_names()
    lines = []
    all_ok = True
    for name in names:
        entry = catalog_lookup(name)
        expected = normalize_unit(entry.delta)
        routes = {
            "fox": knot_delta(entry.crossing_list),
            "burau": burau_mod.closure_alexander(entry.braid),
            "tqft": closed_tangle_delta(braid_closure_expr(entry.braid)),
        }
        bad = [route for route, val in routes.items()
               if val.is_zero or normalize_unit(val) != expected]
        if bad:
            all_ok = False
            lines.append("%s: FAIL (%s)" % (name, ", ".join(sorted(bad))))
        else:
            lines.append("%s: ok" % name)
    return lines, all_ok


def build_parser():
    parser = argparse.ArgumentParser(
        prog="alexkit",
        description="Alexander-type invariants by Fox calculus, tangle "
                    "spans, and Burau matrices.")
    parser.add_argument("verb", choices=_VERBS)
    parser.add_argument("--format", dest="fmt", default="braid",
                        choices=("braid", "xcode", "pd", "dsl"))
    parser.add_argument("--t", dest="t_spec", default="generic")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--file", dest="path")
    parser.add_argument("input", nargs="?", default=None)
    return parser


def _emit_json(obj):
    return json.dumps(obj, separators=(",", ":"))


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        field = parse_t_spec(args.t_spec)
    except _PARSE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3

    if args.verb == "selftest":
        lines, ok = selftest_report()
        print("\n".join(lines))
        return 0 if ok else 1

    if args.path is not None:
        try:
            with open(args.path) as handle:
                raw_lines = handle.read().splitlines()
        except OSError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 2
        for raw in raw_lines:
            stripped = raw.split("#", 1)[0].strip() \
                if args.fmt != "dsl" else raw.strip()
            if not stripped:
                continue
            try:
                obj, _ = _run_verb(args.verb, stripped, args.fmt, field,
                                   None)
                print(_emit_json(obj))
            except (AlexkitError, AssertionError) as exc:
                print(_emit_json({"verb": args.verb, "input": stripped,
                                  "error": str(exc)}))
        return 0

    if args.input is None and args.verb != "catalog":
        print("error: missing input", file=sys.stderr)
        return 2

    try:
        obj, text = _run_verb(args.verb, args.input, args.fmt, field, None)
    except _PARSE_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    print(_emit_json(obj) if args.json else text)
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
