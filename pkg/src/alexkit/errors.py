"""Exception hierarchy shared by all alexkit modules."""


class AlexkitError(Exception):
    """Base class for all errors raised by alexkit."""


class ZeroPolynomial(AlexkitError):
    """An operation that requires a nonzero polynomial got the zero polynomial."""


class NotAUnit(AlexkitError):
    """Evaluation point t = 0 is not invertible."""


class UnknownGenerator(AlexkitError):
    """A word or diagram references a generator with no assigned weight."""


class ParseError(AlexkitError):
    """Malformed textual input; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %s)" % (message, position)
        super().__init__(message)
        self.position = position


class ValidationError(AlexkitError):
    """Structurally invalid diagram data."""


class AmbiguousOrientation(ValidationError):
    """A PD crossing satisfies neither (or both) orientation conditions."""


class NotFound(AlexkitError):
    """Catalog lookup for an unknown name."""


class DimensionMismatch(AlexkitError):
    """Span or matrix shapes are incompatible."""


class BoundaryMismatch(AlexkitError):
    """Tangle composition with unequal boundary objects."""

    def __init__(self, position, expected, found):
        super().__init__(
            "boundary mismatch at %s: expected %s, found %s"
            % (position, expected, found)
        )
        self.position = position
        self.expected = expected
        self.found = found


class UseMultivariableRoute(AlexkitError):
    """Operation defined for knots was called on a multi-component link."""


class UseUnivariateRoute(AlexkitError):
    """Operation defined for links was called on a knot."""


class EmptyMatrix(AlexkitError):
    """Reduced Burau representation of the 1-strand braid group is empty."""
