"""Exception types shared across the package."""


class FreecurveError(Exception):
    """Base class for all domain errors."""


class NotFreeError(FreecurveError):
    """The generator list is not free with respect to its given order.

    ``index`` is the smallest i such that n_i * a_i does not belong to
    the semigroup generated by a_0, ..., a_{i-1}.
    """

    def __init__(self, index):
        self.index = index
        super().__init__(f"not free at generator index {index}")


class NotMemberError(FreecurveError):
    """A value that must lie in the semigroup does not."""


class LimitExceededError(FreecurveError):
    """A brute-force scan hit its bound before stabilizing."""


class InternalConsistencyError(FreecurveError):
    """A structural identity that must hold by construction failed."""


class WindowNotCertifiedError(FreecurveError):
    """The graded-dimension scan never reconciled with the conductor."""


class NonIntegralRelationError(FreecurveError):
    """A delta/beta conversion required a division that is not exact."""


class CapExceededError(FreecurveError):
    """Delta-sequence search exceeded its safety bound."""
