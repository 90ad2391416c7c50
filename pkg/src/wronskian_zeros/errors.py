"""Exception hierarchy shared by every module of the package."""


class WronskianZerosError(ValueError):
    """Base class for all domain errors raised by this package."""


class BothZero(WronskianZerosError):
    pass


class ZeroPolynomial(WronskianZerosError):
    pass


class ParityViolation(WronskianZerosError):
    pass


class ParameterOutOfRange(WronskianZerosError):
    pass


class MomentsNotPositiveDefinite(WronskianZerosError):
    """Raised when a Hankel moment matrix fails positive definiteness.

    ``order`` is the size of the first leading principal minor that is not
    strictly positive (or that cannot be formed from the supplied moments).
    """

    def __init__(self, message: str, order: int):
        super().__init__(message)
        self.order = order


class NotStrictlyIncreasing(WronskianZerosError):
    pass


class DuplicateIndex(WronskianZerosError):
    pass


class NonIntegerResult(WronskianZerosError):
    pass


class InvalidPartition(WronskianZerosError):
    pass
