"""Exception hierarchy.

Class names double as the machine-readable error names printed by the CLI,
so they deliberately carry no ``Error`` suffix.
"""

from __future__ import annotations


class LatticeError(Exception):
    """Base class for every error raised by this package."""


# -- input -----------------------------------------------------------------

class GraphFormatError(LatticeError, ValueError):
    """The edge-list text could not be turned into a simple graph."""


class MalformedLine(GraphFormatError):
    def __init__(self, lineno: int, line: str) -> None:
        super().__init__(f"line {lineno}: expected two non-negative integers, got {line!r}")
        self.lineno = lineno
        self.line = line


class SelfLoop(GraphFormatError):
    def __init__(self, vertex: int) -> None:
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class EmptyInput(GraphFormatError):
    def __init__(self) -> None:
        super().__init__("no edges in input")


class DuplicateEdgeWarning(UserWarning):
    pass


# -- rejection: the graph has no lattice embedding ----------------------------

class Rejected(LatticeError):
    """The graph is not a partial cube, hence has no lattice embedding."""


class Disconnected(Rejected):
    def __init__(self, unreachable: int) -> None:
        super().__init__(f"graph is disconnected: vertex {unreachable} unreachable from vertex 0")
        self.unreachable = unreachable


class NotBipartite(Rejected):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"graph has an odd cycle through edge ({u}, {v})")
        self.edge = (u, v)


class NotPartialCube(Rejected):
    def __init__(self, u: int, v: int, hamming: int, graphdist: int) -> None:
        super().__init__(
            f"vertices {u} and {v}: label distance {hamming} != graph distance {graphdist}"
        )
        self.u, self.v = u, v
        self.hamming = hamming
        self.graphdist = graphdist


class InconsistentClass(Rejected):
    def __init__(self, cls: int, vertex: int) -> None:
        super().__init__(f"vertex {vertex} is equidistant from the ends of class {cls}")
        self.cls = cls
        self.vertex = vertex


# -- verification of candidate objects ----------------------------------------

class IsometryViolation(LatticeError):
    def __init__(self, u: int, v: int, l1: int, graphdist: int) -> None:
        super().__init__(f"vertices {u} and {v}: L1 distance {l1} != graph distance {graphdist}")
        self.u, self.v = u, v
        self.l1 = l1
        self.graphdist = graphdist


class NotAMatching(LatticeError):
    pass


class NotMaximum(LatticeError):
    def __init__(self, size: int, maximum: int) -> None:
        super().__init__(f"matching has {size} edges, maximum is {maximum}")
        self.size = size
        self.maximum = maximum


# -- internal consistency (never expected on valid partial cubes) -------------

class InternalError(LatticeError, AssertionError):
    pass


class CycleDetected(InternalError):
    pass


class NonUniqueCoordinate(InternalError):
    pass


class NoCoordinate(InternalError):
    pass


class SemicubeLookupFailed(InternalError):
    pass


# -- resource guards -----------------------------------------------------------

class TooLarge(LatticeError):
    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what} {size} exceeds limit {limit}")
        self.size = size
        self.limit = limit


class NotEmbeddable(LatticeError):
    pass


class DimensionTooHigh(LatticeError):
    def __init__(self, d: int) -> None:
        super().__init__(f"lattice dimension {d} > 3; pass --project to draw the first three axes")
        self.d = d


class NotFullDimensional(LatticeError):
    def __init__(self, coordinate: int) -> None:
        super().__init__(f"coordinate {coordinate} takes only one value")
        self.coordinate = coordinate
