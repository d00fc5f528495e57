"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SemigroupError(Exception):
    """Base class for all library errors."""


class ConfigError(SemigroupError, ValueError):
    pass


# -- generators ---------------------------------------------------------------


class GeneratorsError(SemigroupError, ValueError):
    """A generator tuple breaks one of the validation rules."""


class NotStrictlyIncreasingError(GeneratorsError):
    pass


class GcdNotOneError(GeneratorsError):
    def __init__(self, gcd: int) -> None:
        super().__init__(f"gcd is {gcd}, must be 1")
        self.gcd = gcd


class MultiplicityTooSmallError(GeneratorsError):
    pass


class NonMinimalError(GeneratorsError):
    def __init__(self, index: int, value: int) -> None:
        super().__init__(
            f"d{index}={value} is a non-negative combination of the other generators"
        )
        self.index = index
        self.value = value


class PairTooSmallError(GeneratorsError):
    pass


class OverflowGuardError(SemigroupError, ArithmeticError):
    """A quantity left the signed 64-bit range or the configured guard."""


# -- series -------------------------------------------------------------------


class SeriesError(SemigroupError, ValueError):
    pass


class HorizonTooSmallError(SeriesError):
    pass


class NotCharacteristicError(SeriesError):
    pass


class InvalidContourError(SeriesError):
    pass


# -- invariants ---------------------------------------------------------------


class InvariantError(SemigroupError):
    pass


class NoZeroInRangeError(InvariantError):
    pass


class SymmetricSemigroupError(InvariantError):
    pass


class NotPerfectSquareError(InvariantError):
    def __init__(self, value: int) -> None:
        super().__init__(f"{value} is not a perfect square")
        self.value = value


class RootSelectionAmbiguousError(InvariantError):
    pass


class NoIntegralAssemblyError(InvariantError):
    pass


class SweepRangeError(InvariantError, ValueError):
    pass


# -- oracle -------------------------------------------------------------------


class SamplingError(SemigroupError, ValueError):
    """The requested random sample cannot be drawn."""
