"""Free words and abelianized Fox derivatives.

Derivatives obey d(x_j)/d(x_i) = delta_ij, d(x_i^-1)/d(x_i) = -x_i^-1 and
the product rule d(uv)/d(x_i) = du/d(x_i) + u dv/d(x_i); here they are
computed directly through the abelianization, never materializing
group-ring elements.
"""
from __future__ import annotations

from .errors import UnknownGenerator
from .laurent import MultiLaurentPoly


class FreeWord:
    """Freely reduced word; letters are (generator index >= 1, +-1)."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple((int(g), int(e)) for g, e in letters)
        for g, e in letters:
            if g < 1:
                raise ValueError("generator indices start at 1")
            if e not in (1, -1):
                raise ValueError("exponents must be +-1")
        for (g1, e1), (g2, e2) in zip(letters, letters[1:]):
            if g1 == g2 and e1 == -e2:
                raise ValueError("word is not freely reduced")
        self.letters = letters

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self):
        return FreeWord([(g, -e) for g, e in reversed(self.letters)])

    def concat(self, other):
        return reduce_word([g * e for g, e in self.letters]
                           + [g * e for g, e in other.letters])

    def __repr__(self):
        parts = ["x%d" % g if e == 1 else "x%d^-1" % g
                 for g, e in self.letters]
        return "FreeWord<%s>" % (" ".join(parts) or "1")


def reduce_word(raw):
    """Freely reduce a sequence of signed generator indices (3 means x3,
    -3 means x3^-1)."""
    stack = []
    for item in raw:
        if isinstance(item, tuple):
            g, e = item
        else:
            g, e = abs(int(item)), (1 if int(item) > 0 else -1)
            if item == 0:
                raise ValueError("generator index 0 is not allowed")
        if g < 1:
            raise ValueError("generator indices start at 1")
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return FreeWord(stack)


class AbelianWeights:
    """Assignment of an invertible monomial weight to each generator."""

    __slots__ = ("assignment", "nvars")

    def __init__(self, assignment, nvars):
        self.assignment = dict(assignment)
        self.nvars = nvars
        for g, w in self.assignment.items():
            if w.nvars != nvars:
                raise ValueError("weight variable count mismatch")
            if not w.is_single_term():
                raise ValueError("weights must be unit monomials")

    @classmethod
    def all_t(cls, generators):
        """Knot weights: every generator goes to the single variable t."""
        t = MultiLaurentPoly.variable(1, 1)
        return cls({g: t for g in generators}, 1)

    def weight(self, g):
        try:
            return self.assignment[g]
        except KeyError:
            raise UnknownGenerator("no weight for generator x%d" % g)


def abelianize(w, weights):
    """Image {w} of a word under the abelianization."""
    out = MultiLaurentPoly.one(weights.nvars)
    for g, e in w.letters:
        wg = weights.weight(g)
        out = out * (wg if e == 1 else wg.term_inverse())
    return out


def fox_derivative_abelianized(w, i, weights):
    """{dw/dx_i}: single left-to-right pass with the running abelianized
    prefix."""
    prefix = MultiLaurentPoly.one(weights.nvars)
    acc = MultiLaurentPoly.zero(weights.nvars)
    for g, e in w.letters:
        wg = weights.weight(g)
        if e == 1:
            if g == i:
                acc = acc + prefix
            prefix = prefix * wg
        else:
            prefix = prefix * wg.term_inverse()
            if g == i:
                acc = acc - prefix
    return acc
