"""Exception hierarchy shared by the library and the CLI.

Every error carries the process exit code the CLI reports for it:
configuration/usage problems exit 2, mathematical failures exit 1.
"""

from __future__ import annotations


class DmodError(Exception):
    exit_code: int = 1

    @property
    def kind(self) -> str:
        return type(self).__name__


class ConfigError(DmodError, ValueError):
    exit_code = 2


class MathError(DmodError, ValueError):
    exit_code = 1


# --- configuration ---------------------------------------------------------

class EvenCharacteristic(ConfigError):
    pass


class NotPrime(ConfigError):
    pass


class BadModulus(ConfigError):
    pass


class PrecisionOutOfRange(ConfigError):
    pass


class UsageError(ConfigError):
    pass


# --- arithmetic ------------------------------------------------------------

class DivisionByZero(DmodError, ZeroDivisionError):
    exit_code = 1


class InexactDivision(MathError):
    pass


class NotMonic(MathError):
    pass


class Reducible(MathError):
    pass


class PrimeIsT(MathError):
    pass


class NotPIntegral(MathError):
    pass


class RingMismatch(MathError):
    pass


# --- series ----------------------------------------------------------------

class NonUnitConstantTerm(MathError):
    pass


class InexactSeriesDivision(MathError):
    pass


class InnerValuationZero(MathError):
    pass


class ZeroMultiplier(MathError):
    pass


# --- graded algebra / mod p -----------------------------------------------

class PrecisionTooLow(MathError):
    pass


class TypeMismatch(MathError):
    pass


class NotModular(MathError):
    def __init__(self, message: str, exponent: int | None = None) -> None:
        super().__init__(message)
        self.exponent = exponent


class EmptySpace(MathError):
    pass


class ZeroDivisor(DmodError, ZeroDivisionError):
    exit_code = 1


class ZeroPolynomial(MathError):
    pass
