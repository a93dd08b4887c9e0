"""Exception hierarchy shared across the package."""


class QalgError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedField(QalgError):
    """Operation requires division but the coefficient ring is not a field."""


class FieldMismatch(QalgError):
    """Operands live over different coefficient fields."""


class DimensionMismatch(QalgError):
    """Ambient dimensions of the operands disagree."""


class GradingViolation(QalgError):
    """A product breaks additivity of parity; carries the offending triple."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class NotAnAutomorphism(QalgError):
    """A claimed algebra automorphism fails bijectivity, multiplicativity
    or parity preservation."""


class InvalidGroupTable(QalgError):
    """Multiplication table is not a group table."""


class DegenerateParameter(QalgError):
    """A construction parameter that must be nonzero is zero."""


class WrongAmbient(QalgError):
    """Element does not live in the expected ambient algebra."""


class ModeMismatch(QalgError):
    """Enveloping-algebra elements have incompatible mode or cutoff."""


class ParameterMismatch(QalgError):
    """Representation parameter does not match the element's parameter."""


class BudgetExceeded(QalgError):
    """Enumeration or survey budget exceeded."""


class DivisionNotExact(QalgError):
    """Polynomial division left a nonzero remainder on an input where
    exactness is not guaranteed."""


class InternalError(QalgError):
    """An exactness assertion failed where theory guarantees it; signals a
    bug in this package, never invalid user input."""


class QalgFormatError(QalgError):
    """Malformed algebra/report file; message carries the position."""
