"""Undirected simple graphs on dense integer ids, edge-list I/O and BFS distances."""

from __future__ import annotations

import warnings
from collections.abc import Iterable
from functools import cached_property

import numba
import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdgeWarning,
    EmptyInput,
    MalformedLine,
    NotBipartite,
    SelfLoop,
    TooLarge,
)

UNREACHED = -1

# Distance-matrix guard used by the CLI (--max-n).
DEFAULT_MAX_N = 20_000


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; adjacency
    lists are sorted ascending.
    """

    __slots__ = ("n", "edges", "adjacency", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        pairs = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            pairs.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)`` arrays of the adjacency structure."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(a) for a in self.adjacency])
        indices = np.fromiter(
            (w for a in self.adjacency for w in a), dtype=np.int64, count=2 * self.m
        )
        return indptr, indices

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(m, 2)`` int array of the sorted edge list."""
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines; ``#`` starts a comment.

    The vertex count is one more than the largest id seen. Duplicate edges
    (in either orientation) are collapsed with a :class:`DuplicateEdgeWarning`.
    """
    seen: set[tuple[int, int]] = set()
    order: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise MalformedLine(lineno, raw)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedLine(lineno, raw) from None
        if u < 0 or v < 0:
            raise MalformedLine(lineno, raw)
        if u == v:
            raise SelfLoop(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            warnings.warn(
                f"line {lineno}: duplicate edge {key} ignored", DuplicateEdgeWarning, stacklevel=2
            )
            continue
        seen.add(key)
        order.append(key)
        top = max(top, u, v)
    if not order:
        raise EmptyInput()
    return Graph(top + 1, order)


def render_edge_list(g: Graph) -> str:
    """Canonical text form: one ``u v`` line per edge, lexicographic order."""
    return "".join(f"{u} {v}\n" for u, v in g.edges)


@numba.njit(cache=True)
def _bfs_into(indptr, indices, source, dist, queue):
    dist[:] = -1
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(indptr[u], indptr[u + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = du
                queue[tail] = w
                tail += 1


@numba.njit(cache=True)
def _all_pairs_into(indptr, indices, out):
    n = out.shape[0]
    dist = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    for s in range(n):
        _bfs_into(indptr, indices, s, dist, queue)
        for v in range(n):
            out[s, v] = dist[v]


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; unreachable vertices get ``-1``."""
    indptr, indices = g.csr
    dist = np.empty(g.n, dtype=np.int64)
    _bfs_into(indptr, indices, source, dist, np.empty(g.n, dtype=np.int64))
    return dist


def validate(g: Graph) -> None:
    """Raise unless ``g`` is connected and bipartite."""
    dist = bfs_distances(g, 0)
    missing = np.flatnonzero(dist == UNREACHED)
    if missing.size:
        raise Disconnected(int(missing[0]))
    if g.m:
        e = g.edge_array
        same = np.flatnonzero((dist[e[:, 0]] - dist[e[:, 1]]) % 2 == 0)
        if same.size:
            u, v = e[same[0]]
            raise NotBipartite(int(u), int(v))


def all_pairs_distances(g: Graph, max_n: int | None = None) -> np.ndarray:
    """Materialize the ``n x n`` hop-distance matrix (one BFS per source).

    Entries are ``int16`` when they fit, else ``int32``; unreachable pairs
    are ``-1``. ``max_n`` bounds the quadratic memory footprint.
    """
    if max_n is not None and g.n > max_n:
        raise TooLarge("vertex count", g.n, max_n)
    dtype = np.int16 if g.n <= np.iinfo(np.int16).max else np.int32
    out = np.empty((g.n, g.n), dtype=dtype)
    indptr, indices = g.csr
    _all_pairs_into(indptr, indices, out)
    return out
