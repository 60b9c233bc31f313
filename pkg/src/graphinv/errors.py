"""Exception types shared by every solver and constructor."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class BadParameter(GraphError):
    pass


class NotATree(GraphError):
    pass


class EmptyEdgeSet(GraphError):
    pass


class NotConnected(GraphError):
    pass


class BadLandmarks(GraphError):
    pass


class TooLarge(GraphError):
    """The instance exceeds the configured exact-computation cap."""


class BudgetExceeded(RuntimeError):
    """A search ran out of its node budget.

    ``lower`` and ``upper`` bracket the true value as far as the search got.
    """

    def __init__(self, message: str, lower: int, upper: int, nodes: int = 0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
