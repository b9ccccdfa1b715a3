"""Diagram input formats: braid words, crossing lists, PD codes, braid
closure, and the built-in catalog of standard examples.

The canonical internal format is the CrossingList: one record
(under_in, over, under_out, sign) per crossing, matching the Wirtinger
relation x_out = x_over^{sign} x_in x_over^{-sign}.
"""
from __future__ import annotations

import re

from .errors import (AmbiguousOrientation, NotFound, ParseError,
                     ValidationError)
from .laurent import LaurentPoly


def _strip_comments(text):
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


class BraidWord:
    """Artin braid word on `strands` strands; letters are nonzero signed
    generator indices with |letter| < strands."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands, letters=()):
        strands = int(strands)
        if strands < 1:
            raise ValidationError("braid needs at least one strand")
        letters = tuple(int(x) for x in letters)
        for x in letters:
            if x == 0 or abs(x) >= strands:
                raise ValidationError("letter %d out of range for %d strands"
                                      % (x, strands))
        self.strands = strands
        self.letters = letters

    def __eq__(self, other):
        if not isinstance(other, BraidWord):
            return NotImplemented
        return (self.strands, self.letters) == (other.strands, other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def render(self):
        toks = ["s%d" % x if x > 0 else "S%d" % -x for x in self.letters]
        return "%d:%s" % (self.strands, (" " + " ".join(toks)) if toks else "")

    def permutation(self):
        """Strand permutation: position p at the bottom ends at perm[p]."""
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def component_count(self):
        """Number of components of the closure = cycles of the permutation."""
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for start in range(self.strands):
            if seen[start]:
                continue
            count += 1
            p = start
            while not seen[p]:
                seen[p] = True
                p = perm[p]
        return count

    def __repr__(self):
        return "BraidWord<%s>" % self.render()


def parse_braid(text):
    """Parse "<n>: s1 S2 -1 ..." (S<i> and negative integers are inverses)."""
    body = _strip_comments(text).strip()
    if ":" not in body:
        raise ParseError("expected '<strands>:' header", position=0)
    head, _, rest = body.partition(":")
    head = head.strip()
    if not re.fullmatch(r"[0-9]+", head):
        raise ParseError("bad strand count %r" % head, position=0)
    strands = int(head)
    if strands < 1:
        raise ParseError("strand count must be >= 1", position=0)
    letters = []
    for idx, tok in enumerate(rest.split()):
        m = re.fullmatch(r"s([0-9]+)", tok)
        if m:
            val = int(m.group(1))
        else:
            m = re.fullmatch(r"S([0-9]+)", tok)
            if m:
                val = -int(m.group(1))
            elif re.fullmatch(r"[+-]?[0-9]+", tok):
                val = int(tok)
            else:
                raise ParseError("bad braid token %r" % tok, position=idx + 1)
        if val == 0 or abs(val) >= strands:
            raise ParseError("generator index out of range in %r" % tok,
                             position=idx + 1)
        letters.append(val)
    return BraidWord(strands, letters)


class Crossing:
    """One crossing record (under_in, over, under_out, sign)."""

    __slots__ = ("under_in", "over", "under_out", "sign")

    def __init__(self, under_in, over, under_out, sign):
        if sign not in (1, -1):
            raise ValidationError("crossing sign must be +-1")
        self.under_in = int(under_in)
        self.over = int(over)
        self.under_out = int(under_out)
        self.sign = sign

    def astuple(self):
        return (self.under_in, self.over, self.under_out, self.sign)

    def __eq__(self, other):
        if not isinstance(other, Crossing):
            return NotImplemented
        return self.astuple() == other.astuple()

    def __hash__(self):
        return hash(self.astuple())

    def __repr__(self):
        return "Crossing(%d, %d, %d, %+d)" % self.astuple()


class CrossingList:
    """Closed-diagram crossing data with derived component labels."""

    __slots__ = ("arc_count", "crossings", "components")

    def __init__(self, arc_count, crossings=()):
        arc_count = int(arc_count)
        if arc_count < 1:
            raise ValidationError("a diagram needs at least one arc")
        crossings = tuple(crossings)
        under_in_seen = {}
        under_out_seen = {}
        for c in crossings:
            for arc in (c.under_in, c.over, c.under_out):
                if not 1 <= arc <= arc_count:
                    raise ValidationError("arc %d out of range 1..%d"
                                          % (arc, arc_count))
            if c.under_out in under_out_seen:
                raise ValidationError("arc %d emitted by two crossings"
                                      % c.under_out)
            if c.under_in in under_in_seen:
                raise ValidationError("arc %d consumed by two crossings"
                                      % c.under_in)
            under_out_seen[c.under_out] = c
            under_in_seen[c.under_in] = c
        # closed diagram: an arc either ends under a crossing on both
        # sides or is a free loop
        for arc in range(1, arc_count + 1):
            if (arc in under_out_seen) != (arc in under_in_seen):
                raise ValidationError("arc %d has a loose end" % arc)
        self.arc_count = arc_count
        self.crossings = crossings
        self.components = self._label_components()

    def _label_components(self):
        parent = list(range(self.arc_count + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for c in self.crossings:
            ra, rb = find(c.under_in), find(c.under_out)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        labels = {}
        order = {}
        for arc in range(1, self.arc_count + 1):
            root = find(arc)
            if root not in order:
                order[root] = len(order) + 1
            labels[arc] = order[root]
        return labels

    @property
    def component_count(self):
        return max(self.components.values())

    def __eq__(self, other):
        if not isinstance(other, CrossingList):
            return NotImplemented
        return (self.arc_count == other.arc_count
                and self.crossings == other.crossings)

    def __hash__(self):
        return hash((self.arc_count, self.crossings))

    def render(self):
        lines = ["arcs %d" % self.arc_count]
        for c in self.crossings:
            lines.append("x %d %d %d %s"
                         % (c.under_in, c.over, c.under_out,
                            "+" if c.sign > 0 else "-"))
        return "\n".join(lines)

    def __repr__(self):
        return "CrossingList<arcs=%d, crossings=%d>" % (
            self.arc_count, len(self.crossings))


def parse_crossing_list(text):
    """Parse the "arcs <n>" header plus "x i j k +|-" lines."""
    lines = [ln.strip() for ln in _strip_comments(text).splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty crossing-list input", position=0)
    m = re.fullmatch(r"arcs\s+([0-9]+)", lines[0])
    if not m:
        raise ParseError("expected 'arcs <n>' header, got %r" % lines[0],
                         position=1)
    arc_count = int(m.group(1))
    crossings = []
    for lineno, ln in enumerate(lines[1:], start=2):
        m = re.fullmatch(r"x\s+([0-9]+)\s+([0-9]+)\s+([0-9]+)\s+([+-])", ln)
        if not m:
            raise ParseError("bad crossing line %r" % ln, position=lineno)
        crossings.append(Crossing(int(m.group(1)), int(m.group(2)),
                                  int(m.group(3)),
                                  1 if m.group(4) == "+" else -1))
    return CrossingList(arc_count, crossings)


def parse_pd(text):
    """Parse planar-diagram tuples X[a,b,c,d] (a = incoming under-arc,
    labels counterclockwise) into a CrossingList.

    The over-strand labels b and d belong to one Wirtinger arc and are
    merged; sign is + when d = b+1 (mod 2m) and - when b = d+1 (mod 2m).
    """
    body = _strip_comments(text)
    stripped = body.strip()
    if not stripped:
        return CrossingList(1, ())
    tuples = []
    pos = 0
    pattern = re.compile(
        r"X\[\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*,\s*([0-9]+)\s*\]")
    while pos < len(body):
        if body[pos].isspace() or body[pos] == ",":
            pos += 1
            continue
        m = pattern.match(body, pos)
        if not m:
            raise ParseError("bad PD token", position=pos)
        tuples.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    labels = 2 * len(tuples)
    counts = {}
    for tup in tuples:
        for lab in tup:
            if not 1 <= lab <= labels:
                raise ValidationError("PD label %d out of range 1..%d"
                                      % (lab, labels))
            counts[lab] = counts.get(lab, 0) + 1
    for lab in range(1, labels + 1):
        if counts.get(lab, 0) != 2:
            raise ValidationError("PD label %d appears %d times, expected 2"
                                  % (lab, counts.get(lab, 0)))
    parent = list(range(labels + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    signs = []
    for a, b, c, d in tuples:
        forward = (b % labels) + 1 == d
        backward = (d % labels) + 1 == b
        if forward == backward:
            raise AmbiguousOrientation(
                "cannot orient PD crossing X[%d,%d,%d,%d]" % (a, b, c, d))
        signs.append(1 if forward else -1)
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    arc_of = {}
    for lab in range(1, labels + 1):
        root = find(lab)
        if root not in arc_of:
            arc_of[root] = len(arc_of) + 1
    crossings = [Crossing(arc_of[find(a)], arc_of[find(b)],
                          arc_of[find(c)], sign)
                 for (a, b, c, d), sign in zip(tuples, signs)]
    return CrossingList(len(arc_of), crossings)


def braid_closure(b):
    """Crossing list of the braid closure: one crossing per letter, arcs
    joined top-to-bottom at matching positions.

    A positive letter takes the strand entering at position i over the
    strand at position i+1; the under-strand re-emerges as a fresh arc.
    """
    n = b.strands
    arcs = list(range(1, n + 1))
    start = list(arcs)
    next_arc = n + 1
    raw = []
    for letter in b.letters:
        i = abs(letter) - 1
        a1, a2 = arcs[i], arcs[i + 1]
        fresh = next_arc
        next_arc += 1
        if letter > 0:
            raw.append((a2, a1, fresh, 1))
            arcs[i], arcs[i + 1] = fresh, a1
        else:
            raw.append((a1, a2, fresh, -1))
            arcs[i], arcs[i + 1] = a2, fresh
    parent = list(range(next_arc))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in range(n):
        ra, rb = find(arcs[p]), find(start[p])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    relabel = {}
    for a in range(1, next_arc):
        root = find(a)
        if root not in relabel:
            relabel[root] = len(relabel) + 1
    crossings = [Crossing(relabel[find(i)], relabel[find(j)],
                          relabel[find(k)], sign)
                 for i, j, k, sign in raw]
    return CrossingList(len(relabel), crossings)


class CatalogEntry:
    """Named example with both a braid and a crossing-list representative."""

    __slots__ = ("name", "braid", "crossing_list", "delta")

    def __init__(self, name, braid_text, crossing_text, delta):
        self.name = name
        self.braid = parse_braid(braid_text)
        self.crossing_list = parse_crossing_list(crossing_text)
        self.delta = delta


def _lp(coeffs):
    return LaurentPoly(coeffs)


_CATALOG = {
    "unknot": CatalogEntry(
        "unknot", "1:", "arcs 1", _lp({0: 1})),
    "trefoil": CatalogEntry(
        "trefoil", "2: s1 s1 s1",
        "arcs 3\nx 3 2 1 +\nx 1 3 2 +\nx 2 1 3 +",
        _lp({0: 1, 1: -1, 2: 1})),
    "figure8": CatalogEntry(
        "figure8", "3: s1 S2 s1 S2",
        # from the standard 4-crossing planar diagram of the figure-eight
        "arcs 4\nx 2 1 3 -\nx 4 3 1 -\nx 3 2 4 +\nx 1 4 2 +",
        _lp({0: 1, 1: -3, 2: 1})),
    "hopf": CatalogEntry(
        "hopf", "2: s1 s1",
        "arcs 2\nx 2 1 2 +\nx 1 2 1 +",
        _lp({0: 1, 1: -1})),
    "solomon": CatalogEntry(
        "solomon", "2: s1 s1 s1 s1",
        "arcs 4\nx 2 1 3 +\nx 1 3 4 +\nx 3 4 2 +\nx 4 2 1 +",
        _lp({0: 1, 1: -1, 2: 1, 3: -1})),
}


def catalog_names():
    return sorted(_CATALOG)


def catalog_lookup(name):
    try:
        return _CATALOG[name]
    except KeyError:
        raise NotFound("no catalog entry named %r" % name)
