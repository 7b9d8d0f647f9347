"""Exception types raised across the package."""


class NexcoverError(Exception):
    """Base class for all package-specific errors."""


class InvalidSpec(NexcoverError):
    """Generator parameters are out of range for the chosen family."""


class ConnectivityFailure(NexcoverError):
    """Rejection sampling exhausted its retry budget without a connected draw."""


class OutOfRange(NexcoverError):
    """A node id does not exist in the graph."""


class DegenerateGraph(NexcoverError):
    """The cost function is undefined (single node or isolated node)."""


class DimensionMismatch(NexcoverError):
    """Vector or matrix dimensions do not agree."""


class SizeLimit(NexcoverError):
    """Instance exceeds the size bound of an exhaustive or dense method."""


class ShrinkNotSupported(NexcoverError):
    """A warm start may only be padded to a larger problem, never truncated."""
