"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GraphError(ValueError):
    """Base class for all errors raised by :mod:`srgraph`."""


class IndexOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class MissingLabels(GraphError):
    pass


class LabelMismatch(GraphError):
    pass


class Disconnected(GraphError):
    pass


class OrderTooLarge(GraphError):
    pass


class NotBipartite(GraphError):
    pass


class CompleteInput(GraphError):
    pass


class EmptyOperand(GraphError):
    pass


class TrivialOperand(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class InvalidParameter(GraphError):
    pass


class MalformedInput(GraphError):
    pass


class UnsupportedLongForm(MalformedInput):
    pass


class GridTooLarge(GraphError):
    pass
