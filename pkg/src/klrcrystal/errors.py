"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code`` used by the CLI when it
writes ``ERROR <code> <detail>`` records.
"""

from __future__ import annotations


class KlrCrystalError(Exception):
    code = "Error"
    exit_code = 1


class DatumError(KlrCrystalError, ValueError):
    code = "InvalidDatum"

    def __init__(self, message: str, i: str | None = None, j: str | None = None):
        super().__init__(message)
        self.i = i
        self.j = j


class NonSymmetric(DatumError):
    code = "NonSymmetric"


class DiagonalNotPositiveEven(DatumError):
    code = "DiagonalNotPositiveEven"


class OffDiagonalPositive(DatumError):
    code = "OffDiagonalPositive"


class DivisibilityFailure(DatumError):
    code = "DivisibilityFailure"


class UnknownVertex(KlrCrystalError, KeyError):
    code = "UnknownVertex"

    def __str__(self) -> str:
        return Exception.__str__(self)


class NotDivisible(KlrCrystalError, ArithmeticError):
    """Exact division left a nonzero remainder."""

    code = "NotDivisible"

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class ZeroCharacter(KlrCrystalError, ValueError):
    code = "ZeroCharacter"


class IndexOutOfRange(KlrCrystalError, ValueError):
    code = "IndexOutOfRange"


class ContentMismatch(KlrCrystalError, ValueError):
    code = "ContentMismatch"


class CapExceeded(KlrCrystalError, RuntimeError):
    code = "CapExceeded"
    exit_code = 2


class TruncationExceeded(KlrCrystalError, RuntimeError):
    code = "TruncationExceeded"
    exit_code = 2


class UsageError(KlrCrystalError, ValueError):
    code = "UsageError"


class AxiomViolation(KlrCrystalError):
    code = "AxiomViolation"
