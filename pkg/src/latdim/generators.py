"""Deterministic graph families for tests, fixtures and benchmarks."""

from __future__ import annotations

import heapq
import itertools
import random

from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def hypercube(k: int) -> Graph:
    if k < 0:
        raise ValueError("hypercube needs k >= 0")
    n = 1 << k
    return Graph(n, ((v, v | (1 << b)) for v in range(n) for b in range(k) if not v >> b & 1))


def grid(a: int, b: int) -> Graph:
    """``a x b`` grid; vertex ``(i, j)`` is ``i*b + j``."""
    return product(path(a), path(b))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def spider(*legs: int) -> Graph:
    """Tree with a centre 0 and one path of each given length hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Graph(nxt, edges)


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``n`` vertices via a Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def product(*factors: Graph) -> Graph:
    """Cartesian product; vertex ids are mixed-radix with the last factor fastest."""
    if not factors:
        return Graph(1)
    result = factors[0]
    for h in factors[1:]:
        edges = []
        for u, v in result.edges:
            for x in range(h.n):
                edges.append((u * h.n + x, v * h.n + x))
        for x, y in h.edges:
            for u in range(result.n):
                edges.append((u * h.n + x, u * h.n + y))
        result = Graph(result.n * h.n, edges)
    return result


def leaf_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == 1)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "hypercube": (hypercube, 1),
    "grid": (grid, 2),
    "random-tree": (random_tree, 2),
    "star": (star, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
}


def from_spec(spec: str) -> Graph:
    """Build a graph from ``name:arg:arg``, e.g. ``grid:3:4`` or ``random-tree:50:7``."""
    name, *args = spec.split(":")
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    fn, arity = FAMILIES[name]
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} integer parameter(s), got {len(args)}")
    try:
        values = [int(a) for a in args]
    except ValueError:
        raise ValueError(f"non-integer parameter in {spec!r}") from None
    return fn(*values)
