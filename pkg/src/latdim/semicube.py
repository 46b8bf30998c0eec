"""Semicubes of a partial cube and the semicube graph over them.

Semicube ``(i, chi)`` (the vertices whose coordinate ``i`` equals ``chi``)
has id ``2*i + chi``, so the complement of semicube ``x`` is ``x ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numba
import numpy as np

from ._bits import full_mask, pack_rows
from .partial_cube import HypercubeLabeling


def semicube_id(i: int, chi: int) -> int:
    return 2 * i + chi


def complement(x: int) -> int:
    return x ^ 1


def semicube_name(x: int) -> str:
    return f"{x >> 1}:{x & 1}"


@dataclass(frozen=True, eq=False)
class SemicubeFamily:
    """The ``2*tau`` semicubes as a boolean membership matrix plus packed bitsets."""

    members: np.ndarray  # (2*tau, n) bool

    @property
    def n(self) -> int:
        return self.members.shape[1]

    @property
    def tau(self) -> int:
        return self.members.shape[0] // 2

    def __len__(self) -> int:
        return self.members.shape[0]

    @cached_property
    def bits(self) -> np.ndarray:
        return pack_rows(self.members)

    @cached_property
    def sizes(self) -> np.ndarray:
        return self.members.sum(axis=1)

    def vertices(self, x: int) -> frozenset[int]:
        return frozenset(int(v) for v in np.flatnonzero(self.members[x]))

    def contains(self, x: int, v: int) -> bool:
        return bool(self.members[x, v])


def semicubes(lab: HypercubeLabeling) -> SemicubeFamily:
    members = np.empty((2 * lab.tau, lab.n), dtype=bool)
    members[0::2] = ~lab.bits.T
    members[1::2] = lab.bits.T
    return SemicubeFamily(members)


class SemicubeGraph:
    """Undirected graph on semicube ids with sorted adjacency lists."""

    def __init__(self, vertex_count: int, edges, adjacency=None) -> None:
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edges))
        if adjacency is None:
            adj: list[list[int]] = [[] for _ in range(vertex_count)]
            for a, b in self.edges:
                adj[a].append(b)
                adj[b].append(a)
            adjacency = [sorted(a) for a in adj]
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adjacency)

    def __repr__(self) -> str:
        return f"SemicubeGraph(vertices={self.vertex_count}, edges={len(self.edges)})"

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


@numba.njit(cache=True)
def _cover_meet_matrix(bits, full):
    """``out[a, b]`` iff semicubes ``a`` and ``b`` cover every vertex and share one.

    Word-wise OR against the all-ones mask, then word-wise AND against
    zero; both loops stop at the first deciding word.
    """
    k, words = bits.shape
    out = np.zeros((k, k), dtype=np.bool_)
    for a in range(k):
        for b in range(a + 1, k):
            if b == (a ^ 1):
                continue
            covers = True
            for j in range(words):
                if (bits[a, j] | bits[b, j]) != full[j]:
                    covers = False
                    break
            if not covers:
                continue
            for j in range(words):
                if bits[a, j] & bits[b, j]:
                    out[a, b] = True
                    out[b, a] = True
                    break
    return out


def build(fam: SemicubeFamily) -> SemicubeGraph:
    """Join two semicubes when their union is V and their intersection is not empty.

    Every pair is tested on the packed bitsets; complement pairs are
    skipped outright since they are disjoint.
    """
    k = len(fam)
    if k == 0:
        return SemicubeGraph(0, ())
    adj = _cover_meet_matrix(fam.bits, full_mask(fam.n))
    lists = [np.flatnonzero(row).tolist() for row in adj]
    a, b = np.nonzero(np.triu(adj))
    return SemicubeGraph(k, zip(a.tolist(), b.tolist()), lists)


def export_dot(sg: SemicubeGraph) -> str:
    lines = ["graph semicubes {"]
    for x in range(sg.vertex_count):
        lines.append(f'  "{semicube_name(x)}";')
    for a, b in sg.edges:
        lines.append(f'  "{semicube_name(a)}" -- "{semicube_name(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
