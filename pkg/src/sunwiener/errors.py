"""Exception hierarchy shared by every module."""

INT64_MAX = 2**63 - 1


class GraphError(ValueError):
    """Base class for structural problems with an input graph."""


class SelfLoopError(GraphError):
    def __init__(self, u: int) -> None:
        super().__init__(f"self-loop at vertex {u}")
        self.u = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"duplicate edge {u}-{v}")
        self.u, self.v = u, v


class VertexOutOfRangeError(GraphError):
    def __init__(self, vertex: int, n: int) -> None:
        super().__init__(f"vertex {vertex} outside 0..{n - 1}")
        self.vertex, self.n = vertex, n


class InvalidParameterError(ValueError):
    """A size or family parameter is outside its allowed range."""


class DomainError(ArithmeticError):
    """The input is well formed but the requested quantity is undefined."""


class DisconnectedError(DomainError):
    def __init__(self, source: int, target: int) -> None:
        super().__init__(f"graph is disconnected: vertex {target} unreachable from {source}")
        self.source, self.target = source, target


class IndexOverflowError(DomainError):
    """A count or closed form left the signed 64-bit range."""


def check_int64(value: int, what: str = "value") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise IndexOverflowError(f"{what} = {value} exceeds the 64-bit range")
    return value
