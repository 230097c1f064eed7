"""Exception hierarchy shared by every module of the package."""


class GraphMonadError(ValueError):
    """Base class for all data errors raised by graphmonads."""


class LabelError(GraphMonadError):
    pass


class EdgeEndpointMissing(GraphMonadError):
    pass


class LoopEdge(GraphMonadError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VertexNotInGraph(GraphMonadError):
    pass


class ParseError(GraphMonadError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MapNotTotal(GraphMonadError):
    pass


class ImageOutsideTarget(GraphMonadError):
    pass


class NotAHomomorphism(GraphMonadError):
    pass


class DomainMismatch(GraphMonadError):
    pass


class SearchSpaceTooLarge(GraphMonadError):
    pass


class InvalidMatching(GraphMonadError):
    pass


class NotAnAlgebra(GraphMonadError):
    pass


class NotEquivariant(GraphMonadError):
    pass


class MalformedNestedLabel(GraphMonadError):
    pass


class InvalidPSTS(GraphMonadError):
    pass


class UncoveredEdge(GraphMonadError):
    pass
