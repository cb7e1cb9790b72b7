"""Exception hierarchy.

Two families matter to callers (and to the CLI exit codes): problems with the
*input data* (``ParseError`` and the graph-construction errors) and violated
*preconditions* of an operation (``PreconditionError``).
"""


class AhGraphError(Exception):
    """Base class for every error raised by this package."""


class GraphError(AhGraphError, ValueError):
    """Malformed graph data."""


class SelfLoop(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"self-loop on vertex {self.pair[0]} in pair {self.pair}")


class DuplicateEdge(GraphError):
    def __init__(self, pair):
        self.pair = tuple(pair)
        super().__init__(f"duplicate edge {self.pair}")


class VertexOutOfRange(GraphError):
    def __init__(self, pair, n):
        self.pair = tuple(pair) if isinstance(pair, (tuple, list)) else (pair,)
        self.n = n
        super().__init__(f"vertex id out of range 0..{n - 1} in {self.pair}")


class ParseError(AhGraphError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CountMismatch(ParseError):
    pass


class NotThreeCnf(ParseError):
    pass


class PreconditionError(AhGraphError, ValueError):
    """An operation was called outside its domain."""


class EmptyGraph(PreconditionError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} requires a graph with at least one vertex")


class NoEdges(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class InvalidArc(PreconditionError):
    pass


class SourceEqualsSink(PreconditionError):
    pass


class NotAPermutation(PreconditionError):
    pass


class LengthMismatch(PreconditionError):
    pass


class UnusedVariable(PreconditionError):
    def __init__(self, variables):
        self.variables = tuple(variables)
        super().__init__(
            "variables occurring in no clause: " + ", ".join(map(str, self.variables))
        )


class BadParams(PreconditionError):
    pass


class InfeasibleDegree(BadParams):
    pass


class RetryExhausted(AhGraphError, RuntimeError):
    pass


class BoundViolation(AhGraphError, AssertionError):
    """A proven inequality failed on a concrete instance (indicates a bug)."""
