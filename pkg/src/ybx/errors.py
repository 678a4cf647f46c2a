"""Exception hierarchy.

``DomainError`` and its subclasses mark inputs outside the open set on which a
birational map is regular. The sampling layer catches exactly these and
resamples; everything else is a genuine failure.
"""


class YbxError(Exception):
    pass


class ZeroDenominator(YbxError, ZeroDivisionError):
    pass


class SizeMismatch(YbxError, ValueError):
    pass


class DimensionMismatch(YbxError, ValueError):
    pass


class IndexOutOfRange(YbxError, IndexError):
    pass


class ZeroMatrix(YbxError, ValueError):
    pass


class FamilyMismatch(YbxError, ValueError):
    pass


class ConfigError(YbxError, ValueError):
    pass


class DomainError(YbxError, ArithmeticError):
    """Input lies outside the domain of definition of a rational map."""


class OutsideDomain(DomainError):
    pass


class Singular(DomainError):
    pass


class ZeroCoordinate(DomainError):
    pass


class DegenerateOutput(DomainError):
    pass


class ResampleExhausted(YbxError):
    pass


class PostconditionFailed(YbxError, AssertionError):
    """A computed value violated an identity it must satisfy by construction."""
