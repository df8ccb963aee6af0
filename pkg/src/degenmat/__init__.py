"""Exact degenerate Bernoulli numbers, generalized Stirling numbers and
Pascal-type matrix factorizations over Q[lambda, mu, x, y].

>>> from degenmat import beta, LAMBDA, X
>>> print(beta(2, 1, LAMBDA, X))
x^2 - x - 1/6*lambda^2 + 1/6
"""

from .errors import (
    BadParams,
    BadShift,
    DegenmatError,
    DomainViolation,
    NonUnitConstant,
    NonUnitDiagonal,
    NotDivisible,
    OrderMismatch,
    ParseError,
    SizeMismatch,
    UnknownIdentity,
    ZeroDenominator,
)
from .matrices import LowerTri, identity, mat_inv, mat_mul, mat_pow
from .ring import (
    LAMBDA,
    MU,
    ONE,
    X,
    Y,
    ZERO,
    EGFSeries,
    MultiPoly,
    as_poly,
    gff,
    parse_poly,
    poly_eval,
)
from .sequences import (
    alpha,
    beta,
    bernoulli_classic,
    bernoulli_second,
    stirling1,
    stirling1_gen,
    stirling2,
    stirling2_gen,
)

__version__ = "0.1.0"

__all__ = [
    "BadParams", "BadShift", "DegenmatError", "DomainViolation", "NonUnitConstant",
    "NonUnitDiagonal", "NotDivisible", "OrderMismatch", "ParseError", "SizeMismatch",
    "UnknownIdentity", "ZeroDenominator",
    "LowerTri", "identity", "mat_inv", "mat_mul", "mat_pow",
    "LAMBDA", "MU", "ONE", "X", "Y", "ZERO", "EGFSeries", "MultiPoly", "as_poly", "gff",
    "parse_poly", "poly_eval",
    "alpha", "beta", "bernoulli_classic", "bernoulli_second", "stirling1",
    "stirling1_gen", "stirling2", "stirling2_gen",
]
