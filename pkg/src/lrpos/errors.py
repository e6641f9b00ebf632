"""Exception types shared across the package."""


class LRPosError(Exception):
    """Base class for every error this package raises deliberately."""


class MalformedInput(LRPosError, ValueError):
    """A partition token is not a decimal integer."""


class NotWeaklyDecreasing(LRPosError, ValueError):
    """Partition parts increase somewhere."""


class NegativePart(LRPosError, ValueError):
    """A partition part is negative."""


class NonpositiveScale(LRPosError, ValueError):
    """A scaling factor must be a positive integer."""


class HeightExceedsRank(LRPosError, ValueError):
    """A partition has more nonzero parts than the ambient rank allows."""


class DimensionMismatch(LRPosError, ValueError):
    """A point's coordinates do not match the system's variable set."""


class BudgetExceeded(LRPosError, RuntimeError):
    """An enumeration ran out of backtracking nodes.

    Enumeration is exponential in general; callers may retry with a
    larger budget.  The count of nodes spent is kept for diagnostics.
    """

    def __init__(self, nodes, message=None):
        self.nodes = nodes
        super().__init__(message or f"node budget exhausted after {nodes} nodes")


class KernelCapacityError(LRPosError):
    """Internal: operands exceed the compiled kernel's fixed-width range.

    Never propagated to callers; the dispatcher retries the same call on
    the pure-Python kernel, which has no width limits.
    """
