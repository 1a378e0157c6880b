"""Exception hierarchy. Every error the package raises derives from AvdError."""


class AvdError(Exception):
    pass


class GraphError(AvdError, ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class ParseError(AvdError, ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SupportError(AvdError, ValueError):
    pass


class DegreeNotTwo(SupportError):
    pass


class PairAdjacent(SupportError):
    pass


class PairsOverlap(SupportError):
    pass


class NoPivot(AvdError):
    pass


class UncoloredEdge(AvdError):
    pass


class PreconditionViolated(AvdError):
    pass


class NotThreeDegenerate(PreconditionViolated):
    pass


class DeltaExceedsK(PreconditionViolated):
    pass


class DeltaTooSmall(PreconditionViolated):
    pass


class TooLarge(AvdError):
    pass


class BadSpec(AvdError, ValueError):
    pass


class InternalInvariantBroken(AvdError):
    """A branch the correctness argument rules out was reached.

    ``trace`` carries the step records collected so far, for post-mortem dumps.
    """

    def __init__(self, message: str, trace: list | None = None):
        super().__init__(message)
        self.trace = trace if trace is not None else []
