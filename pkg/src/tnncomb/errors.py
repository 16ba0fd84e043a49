"""Exception hierarchy shared by all modules.

Every error a caller can trigger through a documented precondition derives
from :class:`DomainError`, so front ends can separate bad input from bugs.
"""


class DomainError(ValueError):
    """Input violates a documented precondition."""


class SingularMatrixError(DomainError):
    pass


class NotTotallyNonnegativeError(DomainError):
    pass


class GuardExceeded(DomainError):
    """An enumeration cap was hit; results are never silently truncated."""


class DegreeBoundError(DomainError):
    pass


class InvalidNetworkError(DomainError):
    pass
