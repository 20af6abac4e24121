"""
SKEWRANK - Error Hierarchy

Every error carries the CLI exit code it maps to:
- 1: a verified mathematical claim failed
- 2: bad input (spec documents, preconditions)
- 3: a resource cap was exceeded
"""

from typing import Any, Optional


class SkewRankError(Exception):
    """Base error"""
    exit_code = 2

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness

    def to_dict(self) -> dict:
        data = {"error": type(self).__name__, "message": str(self)}
        if self.witness is not None:
            data["witness"] = self.witness
        return data


# ============================================
# Input errors (exit 2)
# ============================================

class InputError(SkewRankError):
    exit_code = 2


class SpecError(InputError):
    """Malformed ring-spec, series or ideal document"""


class BadField(InputError):
    """Characteristic is not a prime in the supported range"""


class NotAssociative(InputError):
    """Structure constants fail associativity on a basis triple"""


class NoUnit(InputError):
    """No two-sided identity"""


class AlgebraMismatch(InputError):
    """Operands live in different algebras"""


class ContextMismatch(InputError):
    """Series operands live over different (A, alpha) contexts"""


class NotAutomorphism(InputError):
    """Matrix is singular, not multiplicative or moves the unit"""


class NotAlphaIdeal(InputError):
    """Ideal is not stable under alpha"""


class NotProper(InputError):
    """Ideal equals the whole algebra"""


class NotSemiprime(InputError):
    """Algebra (or quotient) has nonzero radical"""


class NonUnitConstantTerm(InputError):
    """Series constant term is not a unit"""


class ZeroToPrecision(InputError):
    """Series vanishes modulo its precision"""


class PrecisionTooSmall(InputError):
    """Precision too small for the requested witness"""


class NotInIdeal(InputError):
    """Series is not in the induced ideal"""


# ============================================
# Resource errors (exit 3)
# ============================================

class ResourceError(SkewRankError):
    exit_code = 3


class TooLarge(ResourceError):
    """Enumeration or scan exceeds its configured cap"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}",
                         witness={"size": size, "cap": cap})
        self.size = size
        self.cap = cap


def check_cap(what: str, size: int, cap: int):
    """Raise TooLarge when size exceeds cap"""
    if size > cap:
        raise TooLarge(what, size, cap)


# ============================================
# Verification failures (exit 1)
# ============================================

class VerificationFailed(SkewRankError):
    """An internal post-condition did not hold"""
    exit_code = 1

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message, witness)
