"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ValidationError -> 1,
VerificationError (and numeric failures) -> 2, PolyParseError -> 3.
"""


class PlanebranchError(Exception):
    pass


class ValidationError(PlanebranchError, ValueError):
    """Input violates a documented precondition or invariant."""


class VerificationError(PlanebranchError):
    """Two independent computations of the same quantity disagree."""


class NumericError(VerificationError):
    """The floating-point engine failed even at the highest precision tier."""


class ContactUndecidableError(PlanebranchError):
    """Series agree through the truncation window; a deeper expansion is needed."""

    def __init__(self, bound, message=None):
        self.bound = bound
        super().__init__(message or f"contact undecidable at current depth (>= {bound})")


class PolyParseError(PlanebranchError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
