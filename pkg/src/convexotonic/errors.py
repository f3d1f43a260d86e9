"""Exception types shared across the package."""


class PencilError(Exception):
    """Base class for all errors raised by this package."""


class TupleLengthMismatch(PencilError):
    """Two matrix tuples that must have equal length do not."""


class NotSquare(PencilError):
    """An operation requiring square matrices received a rectangular tuple."""


class NotHermitian(PencilError):
    """A matrix required to be Hermitian fails the tolerance check."""


class ShapeMismatch(PencilError):
    """Array dimensions are inconsistent with the operation's contract."""


class DependentInput(PencilError):
    """A tuple required to be linearly independent is numerically dependent."""


class SpanViolation(PencilError):
    """A product falls outside the span of the supplied basis."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class SingularPencil(PencilError):
    """A pencil that must be invertible is numerically singular."""


class DomainBreach(PencilError):
    """A map was evaluated at a point outside its numerical domain."""


class ZeroDirection(PencilError):
    """A direction vector required to be nonzero is zero."""
