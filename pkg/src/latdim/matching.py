"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

Graphs are taken as adjacency sequences: anything with an ``adjacency``
attribute holding sorted neighbour lists of vertices ``0..n-1``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Protocol

from .errors import NotAMatching, NotMaximum, TooLarge

UNMATCHED = -1

BRUTE_FORCE_LIMIT = 24


class HasAdjacency(Protocol):
    @property
    def adjacency(self) -> Sequence[Sequence[int]]: ...


@dataclass(frozen=True)
class Matching:
    mate: tuple[int, ...]

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs) -> Matching:
        mate = [UNMATCHED] * vertex_count
        for a, b in pairs:
            if a == b or mate[a] != UNMATCHED or mate[b] != UNMATCHED:
                raise NotAMatching(f"pair ({a}, {b}) overlaps another pair")
            mate[a], mate[b] = b, a
        return cls(tuple(mate))

    @property
    def vertex_count(self) -> int:
        return len(self.mate)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b in enumerate(self.mate) if a < b)

    @property
    def size(self) -> int:
        return sum(1 for a, b in enumerate(self.mate) if a < b)

    def __len__(self) -> int:
        return self.size

    def partner(self, x: int) -> int:
        return self.mate[x]


def _augmenting_path_end(adj: Sequence[Sequence[int]], mate: list[int], root: int, parent: list[int]) -> int:
    """Grow an alternating tree from ``root``, contracting blossoms.

    Returns an exposed vertex reachable by an augmenting path (recorded in
    ``parent``), or -1 when none exists. Contracted blossoms are kept in a
    union-find whose roots remember the blossom's base vertex.
    """
    n = len(adj)
    uf = list(range(n))
    base_of = list(range(n))
    in_tree = [False] * n
    for i in range(n):
        parent[i] = -1
    in_tree[root] = True
    queue = deque([root])

    def base(x: int) -> int:
        r = x
        while uf[r] != r:
            r = uf[r]
        while uf[x] != r:
            uf[x], x = r, uf[x]
        return base_of[r]

    def lowest_common_base(a: int, b: int) -> int:
        seen = set()
        while True:
            a = base(a)
            seen.add(a)
            if mate[a] == UNMATCHED:
                break
            a = parent[mate[a]]
        while True:
            b = base(b)
            if b in seen:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, stop: int, child: int, blossom: list[int]) -> None:
        while base(v) != stop:
            w = mate[v]
            blossom.append(base(v))
            blossom.append(base(w))
            parent[v] = child
            # odd vertices on the cycle become even once it is contracted
            if not in_tree[w]:
                in_tree[w] = True
                queue.append(w)
            child = w
            v = parent[w]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            bv, bt = base(v), base(to)
            if bv == bt or mate[v] == to:
                continue
            if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != -1):
                stop = lowest_common_base(v, to)
                blossom: list[int] = []
                mark_path(v, stop, to, blossom)
                mark_path(to, stop, v, blossom)
                for b in blossom:
                    base(b)
                    base(stop)
                    rb, rs = uf[b], uf[stop]
                    if rb != rs:
                        uf[rb] = rs
                base(stop)
                base_of[uf[stop]] = stop
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == UNMATCHED:
                    return to
                in_tree[mate[to]] = True
                queue.append(mate[to])
    return -1


def _augment(mate: list[int], parent: list[int], end: int) -> None:
    v = end
    while v != -1:
        pv = parent[v]
        nxt = mate[pv]
        mate[v], mate[pv] = pv, v
        v = nxt


def greedy_matching(adj: Sequence[Sequence[int]]) -> list[int]:
    """Maximal matching visiting vertices by ascending degree, then id.

    Each vertex takes its free neighbour of lowest (degree, id). Low-degree
    vertices have the fewest chances to be matched later, so on the dense
    semicube graphs of trees this leaves almost nothing to augment.
    """
    n = len(adj)
    mate = [UNMATCHED] * n
    order = sorted(range(n), key=lambda v: (len(adj[v]), v))
    rank = [0] * n
    for i, v in enumerate(order):
        rank[v] = i
    for v in order:
        if mate[v] != UNMATCHED or not adj[v]:
            continue
        best = -1
        for w in adj[v]:
            if mate[w] == UNMATCHED and (best == -1 or rank[w] < rank[best]):
                best = w
        if best != -1:
            mate[v], mate[best] = best, v
    return mate


def maximum_matching(graph: HasAdjacency, initial: Matching | None = None) -> Matching:
    """Maximum cardinality matching, deterministic for a given graph.

    Starts from :func:`greedy_matching` (or ``initial``), then searches for
    an augmenting path from each exposed vertex in ascending id order. A
    vertex whose search fails stays exposed for good, so one pass
    suffices. ``O(V^3)``.
    """
    adj = graph.adjacency
    n = len(adj)
    mate = list(initial.mate) if initial is not None else greedy_matching(adj)
    parent = [-1] * n
    # an augmenting path joins two exposed vertices, and a failed root never
    # becomes an endpoint later, so stop once fewer than two candidates remain
    candidates = sum(1 for v in range(n) if mate[v] == UNMATCHED and adj[v])
    for root in range(n):
        if candidates < 2:
            break
        if mate[root] == UNMATCHED and adj[root]:
            end = _augmenting_path_end(adj, mate, root, parent)
            if end != -1:
                _augment(mate, parent, end)
                candidates -= 2
            else:
                candidates -= 1
    return Matching(tuple(mate))


def brute_force_matching_size(graph: HasAdjacency, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """Exact maximum matching size by branch and bound over vertex subsets."""
    adj = graph.adjacency
    n = len(adj)
    if n > limit:
        raise TooLarge("vertex count", n, limit)
    nbr = [sum(1 << w for w in a) for a in adj]

    @lru_cache(maxsize=None)
    def best(avail: int) -> int:
        # drop vertices with no available neighbour
        live = 0
        rest = avail
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if nbr[v] & avail:
                live |= low
            rest ^= low
        if not live:
            return 0
        bound = bin(live).count("1") // 2
        low = live & -live
        v = low.bit_length() - 1
        rest = live ^ low
        result = 0
        options = nbr[v] & rest
        while options:
            w = options & -options
            result = max(result, 1 + best(rest ^ w))
            if result == bound:
                return result
            options ^= w
        return max(result, best(rest))

    return best((1 << n) - 1)


def verify_matching(graph: HasAdjacency, m: Matching) -> None:
    """Raise unless ``m`` is a matching of ``graph`` with no augmenting path."""
    adj = graph.adjacency
    n = len(adj)
    if m.vertex_count != n:
        raise NotAMatching(f"matching spans {m.vertex_count} vertices, graph has {n}")
    for a, b in enumerate(m.mate):
        if b == UNMATCHED:
            continue
        if not (0 <= b < n) or m.mate[b] != a or a == b:
            raise NotAMatching(f"vertex {a} has inconsistent partner {b}")
        if b not in adj[a]:
            raise NotAMatching(f"matched pair ({a}, {b}) is not an edge")
    mate = list(m.mate)
    parent = [-1] * n
    exposed = [v for v in range(n) if mate[v] == UNMATCHED and adj[v]]
    if len(exposed) < 2:
        return
    for root in exposed:
        if _augmenting_path_end(adj, mate, root, parent) != -1:
            raise NotMaximum(m.size, maximum_matching(graph).size)
