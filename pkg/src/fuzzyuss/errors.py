"""Exception hierarchy.

Every error raised by the package derives from :class:`FuzzySystemError`.
Validation problems additionally derive from :class:`ValueError` and
numerical breakdowns from :class:`ArithmeticError`, so callers can catch
them with the builtin they expect.
"""


class FuzzySystemError(Exception):
    pass


# fuzzy numbers
class OrderViolation(FuzzySystemError, ValueError):
    pass


class MonotonicityViolation(FuzzySystemError, ValueError):
    pass


class GridViolation(FuzzySystemError, ValueError):
    pass


class DomainViolation(FuzzySystemError, ValueError):
    pass


# linear algebra
class Singular(FuzzySystemError, ArithmeticError):
    pass


class NotSquare(FuzzySystemError, ValueError):
    pass


class ZeroMatrix(FuzzySystemError, ArithmeticError):
    pass


class RankDeficient(FuzzySystemError, ArithmeticError):
    pass


class DimensionMismatch(FuzzySystemError, ValueError):
    pass


class DimensionCap(FuzzySystemError, ValueError):
    pass


# solution sets
class Inconsistent(FuzzySystemError):
    """The bands of the system have an empty intersection."""


class EmptyPolytope(FuzzySystemError):
    pass


# file input
class ParseError(FuzzySystemError, ValueError):
    pass


class ValidationError(FuzzySystemError, ValueError):
    pass
