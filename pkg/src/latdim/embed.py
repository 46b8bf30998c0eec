"""Lattice embeddings from semicube-graph matchings, and back.

Matching edges plus one edge between every semicube and its complement
form a disjoint union of odd-length paths. Each path is one lattice axis;
a vertex's coordinate on that axis counts how far along the path its
semicube memberships switch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ._bits import chunk_rows, pack_rows
from .errors import (
    CycleDetected,
    IsometryViolation,
    NoCoordinate,
    NonUniqueCoordinate,
    NotPartialCube,
    SemicubeLookupFailed,
)
from .graph import Graph
from .matching import UNMATCHED, Matching, maximum_matching
from .partial_cube import HypercubeLabeling, certify_labeling, recognize
from .semicube import SemicubeFamily, SemicubeGraph, build, complement, semicubes


@dataclass(frozen=True)
class PathDecomposition:
    """Oriented paths of the augmented graph, as sequences of semicube ids."""

    vertex_count: int
    matching: Matching
    paths: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.paths)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


@dataclass(frozen=True, eq=False)
class LatticeEmbedding:
    """Integer coordinates as an ``(n, d)`` array."""

    coords: np.ndarray

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def d(self) -> int:
        return self.coords.shape[1]

    @property
    def ranges(self) -> list[tuple[int, int]]:
        if self.n == 0:
            return []
        return [(int(lo), int(hi)) for lo, hi in zip(self.coords.min(0), self.coords.max(0))]

    def point(self, v: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords[v])

    def l1(self, u: int, v: int) -> int:
        return int(np.abs(self.coords[u] - self.coords[v]).sum())

    def normalized(self) -> LatticeEmbedding:
        if self.n == 0 or self.d == 0:
            return self
        return LatticeEmbedding(self.coords - self.coords.min(axis=0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeEmbedding):
            return NotImplemented
        return self.coords.shape == other.coords.shape and bool((self.coords == other.coords).all())


def path_decomposition(vertex_count: int, m: Matching) -> PathDecomposition:
    """Split matching edges plus complement edges into oriented paths.

    Each path starts at its lower-id endpoint; paths are listed by their
    smallest semicube id.
    """
    if m.vertex_count != vertex_count or vertex_count % 2:
        raise ValueError("matching must span an even number of semicube ids")
    mate = m.mate
    for x in range(vertex_count):
        if mate[x] == complement(x):
            raise CycleDetected(f"semicube {x} is matched to its own complement")
    seen = [False] * vertex_count
    paths = []
    for start in range(vertex_count):
        if seen[start] or mate[start] != UNMATCHED:
            continue
        path = [start]
        seen[start] = True
        x = start
        while True:
            x = complement(x)
            path.append(x)
            seen[x] = True
            if mate[x] == UNMATCHED:
                break
            x = mate[x]
            if seen[x]:
                raise CycleDetected(f"semicube {x} revisited")
            path.append(x)
            seen[x] = True
        paths.append(tuple(path))
    if not all(seen):
        raise CycleDetected(f"semicube {seen.index(False)} lies on a cycle")
    paths.sort(key=min)
    return PathDecomposition(vertex_count, m, tuple(paths))


def check_path_invariants(pd: PathDecomposition, fam: SemicubeFamily) -> None:
    """Odd lengths, complement/matching alternation and nested even-indexed semicubes."""
    for path in pd.paths:
        if len(path) % 2:
            raise CycleDetected(f"path {path} has even length")
        for j in range(0, len(path), 2):
            if path[j + 1] != complement(path[j]):
                raise CycleDetected(f"path {path} breaks complement alternation at {j}")
        for j in range(1, len(path) - 1, 2):
            if pd.matching.mate[path[j]] != path[j + 1]:
                raise CycleDetected(f"path {path} breaks matching alternation at {j}")
        for j in range(0, len(path) - 2, 2):
            if (fam.members[path[j]] & ~fam.members[path[j + 2]]).any():
                raise CycleDetected(f"semicube {path[j]} is not inside {path[j + 2]}")


def coordinates(pd: PathDecomposition, fam: SemicubeFamily, g: Graph | None = None) -> LatticeEmbedding:
    """Coordinate ``x`` on axis ``i``: the unique ``x`` with ``v`` in ``S[2x-1]`` and ``S[2x]``.

    ``S[j]`` is the ``j``-th semicube along path ``i``; ``S[-1]`` and
    ``S[len]`` stand for the whole vertex set.
    """
    n = fam.n if g is None else g.n
    coords = np.zeros((n, pd.d), dtype=np.int64)
    ones = np.ones((1, n), dtype=bool)
    for i, path in enumerate(pd.paths):
        padded = np.concatenate([ones, fam.members[list(path)], ones])
        hits = padded[0::2] & padded[1::2]
        count = hits.sum(axis=0)
        if (count == 0).any():
            raise NoCoordinate(f"vertex {int(np.argmin(count))} on axis {i}")
        if (count > 1).any():
            raise NonUniqueCoordinate(f"vertex {int(np.argmax(count))} on axis {i}")
        coords[:, i] = hits.argmax(axis=0)
    return LatticeEmbedding(coords)


def verify_isometry(g: Graph, dm: np.ndarray, emb: LatticeEmbedding) -> None:
    """All-pairs check that L1 distance of coordinates equals graph distance."""
    if emb.n != g.n:
        raise ValueError(f"embedding covers {emb.n} vertices, graph has {g.n}")
    c = emb.coords
    step = chunk_rows(g.n, g.n * max(1, emb.d))
    for a in range(0, g.n, step):
        block = np.abs(c[a : a + step, None, :] - c[None, :, :]).sum(axis=-1)
        bad = np.argwhere(block != dm[a : a + step])
        if bad.size:
            r, v = bad[0]
            raise IsometryViolation(int(a + r), int(v), int(block[r, v]), int(dm[a + r, v]))


def hypercube_from_embedding(emb: LatticeEmbedding) -> HypercubeLabeling:
    """One bit per axis threshold: bit ``(i, t)`` is 1 iff coordinate ``i`` exceeds ``t``."""
    cols = []
    for i, (lo, hi) in enumerate(emb.ranges):
        for t in range(lo, hi):
            cols.append(emb.coords[:, i] > t)
    bits = np.array(cols, dtype=bool).T if cols else np.zeros((emb.n, 0), dtype=bool)
    return HypercubeLabeling(bits.reshape(emb.n, len(cols)))


def certify_isometry(g: Graph, emb: LatticeEmbedding) -> None:
    """Isometry check without a distance matrix.

    L1 distance equals the Hamming distance of the threshold labeling, so
    the embedding is isometric iff that labeling is.
    """
    if emb.n != g.n:
        raise ValueError(f"embedding covers {emb.n} vertices, graph has {g.n}")
    try:
        certify_labeling(g, hypercube_from_embedding(emb))
    except NotPartialCube as exc:
        raise IsometryViolation(exc.u, exc.v, exc.hamming, exc.graphdist) from exc


def matching_from_embedding(emb: LatticeEmbedding, fam: SemicubeFamily) -> Matching:
    """Match ``{v : x_i(v) > t-1}`` with ``{v : x_i(v) <= t}`` for every interior threshold ``t``."""
    lookup = {row.tobytes(): x for x, row in enumerate(fam.bits)}

    def find(mask: np.ndarray) -> int:
        key = pack_rows(mask[None, :])[0].tobytes()
        if key not in lookup:
            raise SemicubeLookupFailed(f"no semicube equals {np.flatnonzero(mask).tolist()}")
        return lookup[key]

    pairs = []
    for i, (lo, hi) in enumerate(emb.ranges):
        col = emb.coords[:, i]
        for t in range(lo + 1, hi):
            pairs.append((find(col > t - 1), find(col <= t)))
    return Matching.from_pairs(len(fam), pairs)


STAGES = ("recognition", "sc-graph", "matching", "coordinates", "verification")


@dataclass(eq=False)
class PipelineResult:
    graph: Graph
    labeling: HypercubeLabeling
    family: SemicubeFamily
    semicube_graph: SemicubeGraph
    matching: Matching
    decomposition: PathDecomposition
    embedding: LatticeEmbedding
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.embedding.d

    @property
    def tau(self) -> int:
        return self.labeling.tau

    @property
    def matching_size(self) -> int:
        return self.matching.size


def embed(g: Graph, dm: np.ndarray | None = None) -> PipelineResult:
    """Minimum-dimension lattice embedding of ``g``.

    Raises :class:`~latdim.errors.Rejected` subclasses when ``g`` is not a
    partial cube. When ``dm`` is given, recognition and the final isometry
    check run against it pair by pair; otherwise the neighbourhood
    certificates are used.
    """
    timings = {}
    clock = time.perf_counter()

    def lap(stage: str) -> None:
        nonlocal clock
        now = time.perf_counter()
        timings[stage] = now - clock
        clock = now

    lab = recognize(g, dm)
    lap("recognition")
    fam = semicubes(lab)
    sg = build(fam)
    lap("sc-graph")
    m = maximum_matching(sg)
    lap("matching")
    pd = path_decomposition(len(fam), m)
    check_path_invariants(pd, fam)
    emb = coordinates(pd, fam, g)
    lap("coordinates")
    if dm is not None:
        verify_isometry(g, dm, emb)
    else:
        certify_isometry(g, emb)
    lap("verification")
    return PipelineResult(g, lab, fam, sg, m, pd, emb, timings)
