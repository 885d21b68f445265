"""Exception hierarchy shared by every module."""


class NegafactorError(Exception):
    """Base class for all domain errors raised by this package."""


class NotPrime(NegafactorError, ValueError):
    pass


class EvenCharacteristic(NegafactorError, ValueError):
    pass


class CapabilityExceeded(NegafactorError):
    pass


class DivisionByZero(NegafactorError, ZeroDivisionError):
    pass


class FieldMismatch(NegafactorError, ValueError):
    pass


class OrderNotDivisible(NegafactorError, ValueError):
    pass


class NoEmbedding(NegafactorError, ValueError):
    pass


class RootNotFound(NegafactorError, RuntimeError):
    pass


class ZeroElement(NegafactorError, ValueError):
    pass


class NotCoprime(NegafactorError, ValueError):
    pass


class MixedStructure(NegafactorError, RuntimeError):
    """Coset transition is neither uniformly split nor uniformly merged."""


class PredictionMismatch(NegafactorError, RuntimeError):
    """Closed-form coset prediction disagrees with the computed structure."""


class SubfieldProjectionFailure(NegafactorError, RuntimeError):
    pass


class InternalVerificationFailure(NegafactorError, RuntimeError):
    pass


class NotADivisor(NegafactorError, ValueError):
    pass


class IncompatibleLengths(NegafactorError, ValueError):
    pass


class BelowThreshold(NegafactorError, ValueError):
    """Length lies below the lifting threshold; ``direct_count`` still holds the count."""

    def __init__(self, message, direct_count=None):
        super().__init__(message)
        self.direct_count = direct_count
