"""Exception types shared across the package."""


class BasisPartError(Exception):
    """Base class for all errors raised by basispart."""


class EnumerationLimitError(BasisPartError):
    """Requested enumeration size is above the configured bound."""

    def __init__(self, n, limit):
        super().__init__(f"n={n} exceeds the enumeration limit {limit}")
        self.n = n
        self.limit = limit


class OrderLimitError(BasisPartError):
    """Requested series order is above the configured maximum."""

    def __init__(self, order, maximum):
        super().__init__(f"order {order} exceeds the maximum {maximum}")
        self.order = order
        self.maximum = maximum


class PreconditionError(BasisPartError, ValueError):
    """An argument does not satisfy the operation's precondition."""


class FixedPointError(BasisPartError):
    """The involution was applied to its fixed point (a bare Durfee square)."""


class VerificationError(BasisPartError, AssertionError):
    """Two independent computations that must agree did not."""


class SlideError(PreconditionError):
    """A sliding move is not possible; ``reason`` is no-such-column or would-collide."""

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason
