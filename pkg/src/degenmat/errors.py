"""Exception hierarchy shared by every module of the package."""


class DegenmatError(Exception):
    """Base class for all package errors."""


class NotDivisible(DegenmatError, ArithmeticError):
    """A polynomial was divided by a symbol that does not divide every term."""


class OrderMismatch(DegenmatError, ValueError):
    """Two truncated series of different order were combined."""


class NonUnitConstant(DegenmatError, ArithmeticError):
    """A series without constant term 1 was inverted or raised to a negative power."""


class BadParams(DegenmatError, ValueError):
    """Generalized Stirling parameters (mu, lambda, x) equal to (0, 0, 0)."""


class SizeMismatch(DegenmatError, ValueError):
    """Matrices of different order were combined."""


class NonUnitDiagonal(DegenmatError, ArithmeticError):
    """A lower-triangular matrix without an all-ones diagonal was inverted."""


class ZeroDenominator(DegenmatError, ZeroDivisionError):
    """An entry of R_n[lambda, x] has a vanishing denominator at the given binding."""


class BadShift(DegenmatError, ValueError):
    """A second-type Stirling matrix entry would divide by a zero binomial."""


class UnknownIdentity(DegenmatError, KeyError):
    """The requested identity id is not in the catalog."""


class DomainViolation(DegenmatError, ValueError):
    """A grid case breaks an identity's side condition."""


class ParseError(DegenmatError, ValueError):
    """Malformed polynomial, rational, or range text."""
