"""Exception hierarchy shared by every package module."""


class BalancedError(Exception):
    """Base class for all errors raised by this package."""


# graph-core

class GraphError(BalancedError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Graph6Error(BalancedError, ValueError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedPayload(Graph6Error):
    pass


class SizeLimitExceeded(BalancedError, ValueError):
    pass


# balance

class LengthMismatch(BalancedError, ValueError):
    pass


class InvalidLabel(BalancedError, ValueError):
    pass


# families

class BadParams(BalancedError, ValueError):
    pass


class NotApplicable(BalancedError, ValueError):
    pass


class HypothesisViolated(BalancedError, ValueError):
    pass


class EdgeOverlap(BalancedError, ValueError):
    pass


# cubic

class NotCubic(BalancedError, ValueError):
    pass


class NotTait(BalancedError, ValueError):
    pass


class NotThreeMatchings(BalancedError, ValueError):
    pass


class CharacterizationFails(BalancedError, ValueError):
    pass


class InvalidDataset(BalancedError, ValueError):
    pass


# circulant

class BadSpec(BalancedError, ValueError):
    pass


class NotSquare(BalancedError, ValueError):
    pass


class Singular(BalancedError, ValueError):
    pass


class LayoutUnknown(BalancedError, ValueError):
    pass


# classify

class BadN(BalancedError, ValueError):
    pass


class CrossCheckFailed(BalancedError):
    """An internal cross-check disagreed; never a user input problem."""
