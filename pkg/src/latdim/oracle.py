"""Exhaustive-search oracles for small graphs.

These mirror the definitions directly (search for an isometric labeling,
count semicubes) and share no code with the polynomial pipeline beyond the
:class:`~latdim.graph.Graph` container. Exponential; inputs are capped.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotEmbeddable, TooLarge
from .graph import Graph
from .semicube import SemicubeFamily


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 8
    max_dimension: int = 7


DEFAULT_BUDGET = OracleBudget()


def _distances(g: Graph) -> list[list[int]]:
    dist = []
    for s in range(g.n):
        row = [-1] * g.n
        row[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adjacency[x]:
                if row[y] < 0:
                    row[y] = row[x] + 1
                    q.append(y)
        dist.append(row)
    return dist


def _bfs_tree(g: Graph) -> tuple[list[int], list[int]]:
    order, parent = [0], [-1] * g.n
    seen = {0}
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                order.append(y)
    return order, parent


def _check_budget(g: Graph, budget: OracleBudget) -> None:
    if g.n > budget.max_vertices:
        raise TooLarge("vertex count", g.n, budget.max_vertices)


def oracle_is_partial_cube(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Search all labelings ``V -> {0,1}^(n-1)`` for one with Hamming = graph distance.

    Vertex 0 is pinned to the all-zero label and bits are introduced in
    order of first use, which loses no embeddings up to cube symmetry.
    """
    _check_budget(g, budget)
    dist = _distances(g)
    if any(d < 0 for d in dist[0]):
        return False
    if g.n == 1:
        return True
    order, parent = _bfs_tree(g)
    width = g.n - 1
    label = [0] * g.n

    def place(idx: int, used: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        for b in range(min(used + 1, width)):
            cand = label[parent[v]] ^ (1 << b)
            if all(bin(cand ^ label[u]).count("1") == dist[v][u] for u in order[:idx]):
                label[v] = cand
                if place(idx + 1, max(used, b + 1)):
                    return True
        return False

    return place(1, 0)


def _lattice_embeds(g: Graph, dist: list[list[int]], d: int) -> bool:
    order, parent = _bfs_tree(g)
    point: list[tuple[int, ...]] = [()] * g.n
    point[0] = (0,) * d

    def place(idx: int, used: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        base = point[parent[v]]
        for axis in range(min(used + 1, d)):
            # a fresh axis is first walked in the + direction (reflection symmetry)
            for step in ((1,) if axis == used else (1, -1)):
                cand = base[:axis] + (base[axis] + step,) + base[axis + 1 :]
                if all(
                    sum(abs(a - b) for a, b in zip(cand, point[u])) == dist[v][u]
                    for u in order[:idx]
                ):
                    point[v] = cand
                    if place(idx + 1, max(used, axis + 1)):
                        return True
        return False

    return place(1, 0)


def oracle_min_lattice_dim(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest ``d`` admitting an isometric map into ``Z^d``, by exhaustive search.

    Vertex 0 sits at the origin, each vertex is one unit step from its BFS
    parent, and axes are introduced in order of first use.
    """
    _check_budget(g, budget)
    dist = _distances(g)
    if any(x < 0 for x in dist[0]):
        raise NotEmbeddable("graph is disconnected")
    if g.n == 1:
        return 0
    for d in range(1, min(g.n - 1, budget.max_dimension) + 1):
        if _lattice_embeds(g, dist, d):
            return d
    raise NotEmbeddable(f"no isometric embedding in dimension <= {g.n - 1}")


def oracle_semicube_count_distance(fam: SemicubeFamily, u: int, v: int) -> int:
    """Number of semicubes containing ``u`` but not ``v``."""
    return sum(1 for x in range(len(fam)) if fam.contains(x, u) and not fam.contains(x, v))


def naive_semicube_edges(fam: SemicubeFamily) -> set[tuple[int, int]]:
    """Semicube-graph edges by plain set algebra on vertex sets."""
    sets = [fam.vertices(x) for x in range(len(fam))]
    everything = frozenset(range(fam.n))
    return {
        (a, b)
        for a in range(len(sets))
        for b in range(a + 1, len(sets))
        if sets[a] | sets[b] == everything and sets[a] & sets[b]
    }
