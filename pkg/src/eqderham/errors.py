"""Exception types shared across the package."""


class EqDerhamError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(EqDerhamError):
    """Vectors, matrices or coordinate data of incompatible sizes."""


class UniverseMismatchError(EqDerhamError):
    """Elements of different generator universes or models were combined."""


class GeneratorActionError(EqDerhamError):
    """A graded operator was applied to a generator it has no action for."""


class InvalidComplexError(EqDerhamError):
    """Boundaries not contained in cycles: d**2 != 0 somewhere upstream."""


class ValidationFailure(EqDerhamError):
    """An axiom check failed; carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class WeilConstructionError(ValidationFailure):
    """Weil algebra construction failed its axiom checks."""


class ModelValidationError(ValidationFailure):
    """A DGA model or bundle model failed validation."""


class InvalidConnectionError(ValidationFailure):
    """A proposed connection failed the connection axioms."""


class NotInvariantError(EqDerhamError):
    """Polynomial is not Ad-invariant for the declared Lie algebra."""


class NotBasicError(EqDerhamError):
    """An element expected to descend to the base is not basic."""


class CutoffExceededError(EqDerhamError):
    """A degree beyond the configured cutoff was requested."""


class UnknownModelError(EqDerhamError):
    """Builtin model name not in the catalog."""


class InternalInconsistencyError(EqDerhamError):
    """Two independent computation paths disagreed; indicates a bug."""


class ParseError(EqDerhamError):
    """Syntax or literal error in a model file, with position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}" + (f", col {col}" if col is not None else "") + f": {message}"
        super().__init__(message)
