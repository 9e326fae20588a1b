"""Exception hierarchy shared by every module.

Each class maps to one CLI exit code (see :mod:`subdet.cli`).
"""


class SubdetError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(SubdetError, ValueError):
    """Matrix or vector dimensions are inconsistent."""


class SingularMatrixError(SubdetError, ValueError):
    """A nonsingular square matrix was required."""


class DegenerateInputError(SubdetError, ValueError):
    """Input is structurally degenerate (e.g. the zero matrix)."""


class ParameterError(SubdetError, ValueError):
    """A scalar parameter is outside its admissible range."""


class RankError(ParameterError):
    """The matrix rank is too small for the requested operation."""


class PreconditionError(SubdetError):
    """An operation was called on input violating its documented precondition."""


class DomainError(SubdetError):
    """The polyhedron is empty, unbounded or not pointed where that is not allowed."""


class SizeLimitError(SubdetError):
    """An enumeration would exceed its configured cap."""


class ParseError(SubdetError, ValueError):
    """Malformed instance text."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
