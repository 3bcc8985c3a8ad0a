# algebra/errors.py
"""
Exception hierarchy shared by every package.

InvalidInputError marks bad user data (CLI exit 2); ComputationError marks a
well-formed request that has no answer in this setting (CLI exit 3).
"""


class AlgebraError(Exception):
    """Base class for all domain errors."""


class InvalidInputError(AlgebraError, ValueError):
    """The input is malformed or outside the accepted range."""


class ComputationError(AlgebraError):
    """The input is well-formed but the requested computation is impossible."""


# ── input errors ─────────────────────────────────────────────


class UnsupportedCharacteristicError(InvalidInputError):
    def __init__(self, characteristic: int):
        super().__init__(f"characteristic {characteristic} unsupported")
        self.characteristic = characteristic


class RingMismatchError(InvalidInputError):
    def __init__(self, message: str = "operands live in different rings"):
        super().__init__(message)


class UnknownVariableError(InvalidInputError):
    def __init__(self, name: str, context: str = ""):
        where = f" in {context}" if context else ""
        super().__init__(f"unknown variable '{name}'{where}")
        self.name = name


class SingularMatrixError(InvalidInputError):
    def __init__(self, message: str = "matrix is singular"):
        super().__init__(message)


class ShapeError(InvalidInputError):
    pass


class PolynomialSyntaxError(InvalidInputError):
    """Raised by the polynomial text grammar; carries a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


# ── computational errors ─────────────────────────────────────


class NotZeroDimensionalError(ComputationError):
    pass


class NotHomogeneousError(ComputationError):
    pass


class SupportNotAtOriginError(ComputationError):
    pass


class IrrationalSupportError(ComputationError):
    def __init__(self, variable: str):
        super().__init__(f"irrational support: eliminant in '{variable}' has a non-linear factor")
        self.variable = variable


class NonGorensteinError(ComputationError):
    pass


class UnrealizableHilbertFunctionError(ComputationError):
    pass


class ClassificationRangeError(ComputationError):
    pass


class SaturationLimitError(ComputationError):
    pass


class TrialsExhaustedError(ComputationError):
    pass


class ExactDivisionError(ComputationError):
    pass


class ConstructionError(ComputationError):
    pass


class NotArithmeticallyGorensteinError(ComputationError):
    pass


class NotReducedPointError(ComputationError):
    pass


class InadmissibleStratumError(ComputationError):
    """Span codimension that no arithmetically Gorenstein scheme of this degree can have."""
