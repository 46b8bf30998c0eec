"""Partial-cube recognition by Djokovic's method.

Edges are grouped into Djokovic-Winkler classes by the one-endpoint test
against ``W(u, v) = {w : d(w, u) < d(w, v)}``; each class becomes one
hypercube coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from ._bits import chunk_rows, pack_rows, popcount
from .errors import Disconnected, InconsistentClass, NotFullDimensional, NotPartialCube
from .graph import Graph, bfs_distances, validate


@dataclass(frozen=True, eq=False)
class ThetaClass:
    edge: tuple[int, int]
    edges: tuple[tuple[int, int], ...]
    near: np.ndarray  # W(u, v) for the defining edge, as a boolean mask
    tie: int = -1  # some vertex equidistant from u and v, if any


@dataclass(frozen=True, eq=False)
class HypercubeLabeling:
    """Vertex labels in ``{0,1}^tau`` as an ``(n, tau)`` boolean matrix."""

    bits: np.ndarray
    classes: tuple[tuple[tuple[int, int], ...], ...] | None = None

    @property
    def n(self) -> int:
        return self.bits.shape[0]

    @property
    def tau(self) -> int:
        return self.bits.shape[1]

    def label(self, v: int) -> str:
        return "".join("1" if b else "0" for b in self.bits[v])

    def hamming(self, u: int, v: int) -> int:
        return int(np.count_nonzero(self.bits[u] != self.bits[v]))

    def side_sizes(self) -> list[tuple[int, int]]:
        ones = self.bits.sum(axis=0)
        return [(self.n - int(k), int(k)) for k in ones]


@numba.njit(cache=True)
def _near_side(indptr, indices, u, v, near, dist, queue):
    """W(u, v) from one BFS rooted at ``v``: the vertices with a shortest
    path from ``v`` whose first step is ``u``.

    Returns -1, or a vertex on an edge joining two vertices equidistant
    from ``v``; only odd cycles produce one, and they are the only way some
    vertex can be equidistant from ``u`` and ``v``.
    """
    dist[:] = -1
    near[:] = False
    dist[v] = 0
    dist[u] = 1
    near[u] = True
    queue[0] = u
    tail = 1
    for k in range(indptr[v], indptr[v + 1]):
        w = indices[k]
        if w != u:
            dist[w] = 1
            queue[tail] = w
            tail += 1
    head = 0
    tie = -1
    while head < tail:
        x = queue[head]
        head += 1
        dx = dist[x]
        for k in range(indptr[x], indptr[x + 1]):
            y = indices[k]
            if dist[y] < 0:
                dist[y] = dx + 1
                near[y] = near[x]
                queue[tail] = y
                tail += 1
            elif dist[y] == dx + 1:
                near[y] = near[y] or near[x]
            elif dist[y] == dx and tie < 0:
                tie = y
    return tie


@numba.njit(cache=True)
def _near_side_from_rows(du, dv, near):
    tie = -1
    for w in range(near.shape[0]):
        near[w] = du[w] < dv[w]
        if du[w] == dv[w] and tie < 0:
            tie = w
    return tie


@numba.njit(cache=True)
def _claim_crossing(eu, ev, near, owner, cls):
    for k in range(eu.shape[0]):
        if owner[k] < 0 and near[eu[k]] != near[ev[k]]:
            owner[k] = cls


def theta_classes(g: Graph, dm: np.ndarray | None = None) -> list[ThetaClass]:
    """Partition the edges into Djokovic-Winkler classes.

    Edges are scanned in sorted order; the first unclassified edge ``uv``
    defines a class, and every unclassified edge with exactly one endpoint
    in ``W(u, v)`` joins it. Distances come from ``dm`` when given,
    otherwise from one BFS per class.
    """
    if g.m == 0:
        return []
    e = g.edge_array
    eu, ev = np.ascontiguousarray(e[:, 0]), np.ascontiguousarray(e[:, 1])
    indptr, indices = g.csr
    owner = np.full(g.m, -1, dtype=np.int64)
    dist = np.empty(g.n, dtype=np.int64)
    queue = np.empty(g.n, dtype=np.int64)
    reps: list[tuple[tuple[int, int], np.ndarray, int]] = []
    for k in range(g.m):
        if owner[k] >= 0:
            continue
        u, v = g.edges[k]
        near = np.empty(g.n, dtype=np.bool_)
        if dm is None:
            tie = _near_side(indptr, indices, u, v, near, dist, queue)
        else:
            tie = _near_side_from_rows(dm[u], dm[v], near)
        _claim_crossing(eu, ev, near, owner, len(reps))
        reps.append(((u, v), near, int(tie)))
    order = np.argsort(owner, kind="stable")
    bounds = np.searchsorted(owner[order], np.arange(len(reps) + 1))
    return [
        ThetaClass(
            edge=edge,
            edges=tuple(g.edges[j] for j in order[bounds[i] : bounds[i + 1]]),
            near=near,
            tie=tie,
        )
        for i, (edge, near, tie) in enumerate(reps)
    ]


def labeling_from_classes(g: Graph, classes: list[ThetaClass], base: int = 0) -> HypercubeLabeling:
    """Coordinate ``i`` of ``v`` is 0 iff ``v`` lies on ``base``'s side of class ``i``."""
    bits = np.zeros((g.n, len(classes)), dtype=bool)
    for i, cls in enumerate(classes):
        if cls.tie >= 0:
            raise InconsistentClass(i, cls.tie)
        bits[:, i] = cls.near != cls.near[base]
    return HypercubeLabeling(bits, tuple(c.edges for c in classes))


def _check_full_dimensional(lab: HypercubeLabeling) -> None:
    ones = lab.bits.sum(axis=0)
    flat = np.flatnonzero((ones == 0) | (ones == lab.n))
    if flat.size:
        raise NotFullDimensional(int(flat[0]))


def verify_labeling(g: Graph, dm: np.ndarray, lab: HypercubeLabeling) -> None:
    """All-pairs check that label Hamming distance equals graph distance.

    Raises :class:`NotPartialCube` for the first violating pair in row-major
    order, or :class:`NotFullDimensional` for a constant coordinate.
    """
    if lab.n != g.n:
        raise ValueError(f"labeling covers {lab.n} vertices, graph has {g.n}")
    packed = pack_rows(lab.bits)
    step = chunk_rows(g.n, g.n * packed.shape[1])
    for a in range(0, g.n, step):
        block = popcount(packed[a : a + step, None, :] ^ packed[None, :, :])
        bad = np.argwhere(block != dm[a : a + step])
        if bad.size:
            r, v = bad[0]
            raise NotPartialCube(int(a + r), int(v), int(block[r, v]), int(dm[a + r, v]))
    _check_full_dimensional(lab)


@numba.njit(cache=True)
def _edge_flips(packed, eu, ev, coord):
    """Store the flipped coordinate of each edge; return the first edge
    flipping other than exactly one coordinate, or -1."""
    for k in range(eu.shape[0]):
        c = -1
        flips = 0
        for j in range(packed.shape[1]):
            x = packed[eu[k], j] ^ packed[ev[k], j]
            while x:
                low = x & (~x + np.uint64(1))
                if flips == 0:
                    b = 0
                    while (low >> np.uint64(b)) != np.uint64(1):
                        b += 1
                    c = 64 * j + b
                flips += 1
                x ^= low
        if flips != 1:
            return k
        coord[k] = c
    return -1


@numba.njit(cache=True)
def _lonely_meets(indptr, arc_side, sets):
    """For each vertex, AND the semicubes on its side of every incident edge.

    Returns ``(v, s)`` for the first vertex ``v`` whose meet holds another
    vertex ``s``, or ``(-1, -1)``.
    """
    n = indptr.shape[0] - 1
    words = sets.shape[1]
    acc = np.empty(words, dtype=np.uint64)
    for v in range(n):
        first = arc_side[indptr[v]]
        for j in range(words):
            acc[j] = sets[first, j]
        for k in range(indptr[v] + 1, indptr[v + 1]):
            x = arc_side[k]
            for j in range(words):
                acc[j] &= sets[x, j]
        own = v >> 6
        acc[own] &= ~(np.uint64(1) << np.uint64(v & 63))
        for j in range(words):
            if acc[j]:
                low = acc[j] & (~acc[j] + np.uint64(1))
                b = 0
                while (low >> np.uint64(b)) != np.uint64(1):
                    b += 1
                return v, 64 * j + b
    return -1, -1


def certify_labeling(g: Graph, lab: HypercubeLabeling) -> None:
    """Isometry check without a distance matrix, in ``O(m*tau/64 + m*n/64)``.

    A labeling in which every edge flips exactly one coordinate is an
    isometry iff, for every vertex ``v``, the only vertex lying in all the
    sets ``W(v, w)`` (``w`` a neighbour of ``v``) is ``v`` itself: any other
    such vertex ``s`` has no neighbour of ``v`` closer to it in label
    distance, so no shortest ``v``-``s`` path can exist at that distance.
    """
    if lab.n != g.n:
        raise ValueError(f"labeling covers {lab.n} vertices, graph has {g.n}")
    _check_full_dimensional(lab)
    if g.m == 0:
        return
    bits = lab.bits
    e = g.edge_array
    eu, ev = np.ascontiguousarray(e[:, 0]), np.ascontiguousarray(e[:, 1])
    edge_coord = np.empty(g.m, dtype=np.int64)
    bad = _edge_flips(pack_rows(bits), eu, ev, edge_coord)
    if bad >= 0:
        u, v = int(eu[bad]), int(ev[bad])
        raise NotPartialCube(u, v, lab.hamming(u, v), 1)

    indptr, indices = g.csr
    n = g.n
    isolated = np.flatnonzero(np.diff(indptr) == 0)
    if isolated.size:
        raise Disconnected(int(isolated[0]))
    src = np.repeat(np.arange(n), np.diff(indptr))
    lo, hi = np.minimum(src, indices), np.maximum(src, indices)
    arc_edge = np.searchsorted(eu * n + ev, lo * n + hi)
    arc_coord = edge_coord[arc_edge]
    # W(v, w) is the semicube on v's side of the coordinate the arc flips
    arc_side = 2 * arc_coord + bits[src, arc_coord]

    members = np.empty((2 * lab.tau, n), dtype=bool)
    members[0::2] = ~bits.T
    members[1::2] = bits.T
    v, s = _lonely_meets(indptr, arc_side, pack_rows(members))
    if v >= 0:
        v, s = int(v), int(s)
        dist = int(bfs_distances(g, v)[s])
        raise NotPartialCube(min(v, s), max(v, s), lab.hamming(v, s), dist)


def recognize(g: Graph, dm: np.ndarray | None = None, base: int = 0) -> HypercubeLabeling:
    """Return the full-dimensional hypercube labeling of ``g`` or raise.

    With a distance matrix the result is checked pair by pair; without one
    the cheaper neighbourhood certificate is used. Both are exact.
    """
    validate(g)
    lab = labeling_from_classes(g, theta_classes(g, dm), base=base)
    if dm is not None:
        verify_labeling(g, dm, lab)
    else:
        certify_labeling(g, lab)
    return lab
