"""Exception types shared across the package."""


class StickyReconError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(StickyReconError, ValueError):
    """An argument violates the documented preconditions."""


class RunTooShort(StickyReconError, ValueError):
    """A sticky deletion was requested on a run of length one."""


class WorkBoundExceeded(StickyReconError, RuntimeError):
    """A brute-force oracle would enumerate more states than allowed."""

    def __init__(self, needed, bound, what="states"):
        self.needed = needed
        self.bound = bound
        super().__init__(f"{what}: {needed} exceeds work bound {bound}")
