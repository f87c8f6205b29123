"""Exception hierarchy shared by all bifurcata modules."""


class BifurcataError(Exception):
    """Base class for all errors raised by this package."""


class PolynomialSyntaxError(BifurcataError):
    """Raised by the expression parser; carries the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class NonPrimitiveInputError(BifurcataError):
    """Input polynomial is a function of x^2 + y^2; the scan refuses it."""


class DegenerateGeometryError(BifurcataError):
    """A solution set expected to be finite has a positive-dimensional part."""


class InternalInvariantError(BifurcataError):
    """An internal consistency check failed; indicates a bug upstream."""
