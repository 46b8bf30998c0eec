from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latdim import generators as gen
from latdim.errors import NotAMatching, NotMaximum, TooLarge
from latdim.graph import Graph
from latdim.matching import (
    UNMATCHED,
    Matching,
    brute_force_matching_size,
    greedy_matching,
    maximum_matching,
    verify_matching,
)
from latdim.semicube import SemicubeGraph


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def assert_valid(g: Graph, m: Matching) -> None:
    for a, b in m.pairs:
        assert g.has_edge(a, b)
        assert m.partner(a) == b and m.partner(b) == a


class TestMatchingType:
    def test_from_pairs(self):
        m = Matching.from_pairs(5, [(0, 3), (4, 1)])
        assert m.mate == (3, 4, UNMATCHED, 0, 1)
        assert m.pairs == ((0, 3), (1, 4))
        assert m.size == len(m) == 2

    def test_overlap_rejected(self):
        with pytest.raises(NotAMatching):
            Matching.from_pairs(4, [(0, 1), (1, 2)])
        with pytest.raises(NotAMatching):
            Matching.from_pairs(4, [(2, 2)])


class TestExamples:
    def test_triangle(self):
        assert maximum_matching(gen.complete(3)).size == 1
        assert brute_force_matching_size(gen.complete(3)) == 1

    def test_c5(self):
        assert maximum_matching(gen.cycle(5)).size == 2
        assert brute_force_matching_size(gen.cycle(5)) == 2

    def test_edgeless(self):
        g = Graph(4)
        assert maximum_matching(g).mate == (UNMATCHED,) * 4
        assert brute_force_matching_size(g) == 0

    def test_empty(self):
        assert maximum_matching(SemicubeGraph(0, ())).size == 0

    def test_petersen_perfect(self):
        m = maximum_matching(gen.petersen())
        assert m.size == 5
        assert_valid(gen.petersen(), m)

    def test_brute_force_limit(self):
        with pytest.raises(TooLarge):
            brute_force_matching_size(gen.path(25))
        assert brute_force_matching_size(gen.path(24)) == 12

    def test_blossom_needed_from_bad_start(self):
        # triangle 0-1-2 with tails 2-3 and 0-4; matching {1-2} blocks the greedy path
        g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4)])
        start = Matching.from_pairs(5, [(1, 2)])
        m = maximum_matching(g, start)
        assert m.size == 2
        assert_valid(g, m)

    def test_nested_blossoms(self):
        # two pentagons sharing a vertex, each with a pendant
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0), (2, 9), (7, 10)]
        g = Graph(11, edges)
        assert maximum_matching(g).size == brute_force_matching_size(g) == 5

    def test_greedy_is_maximal(self):
        g = random_graph(20, 0.2, 3)
        mate = greedy_matching(g.adjacency)
        for u, v in g.edges:
            assert mate[u] != UNMATCHED or mate[v] != UNMATCHED

    def test_deterministic(self):
        g = random_graph(30, 0.15, 8)
        assert maximum_matching(g) == maximum_matching(g)


class TestVerify:
    def test_accepts_maximum(self):
        g = gen.cycle(6)
        verify_matching(g, maximum_matching(g))

    def test_rejects_non_maximum(self):
        g = gen.path(4)
        with pytest.raises(NotMaximum) as info:
            verify_matching(g, Matching.from_pairs(4, [(1, 2)]))
        assert (info.value.size, info.value.maximum) == (1, 2)

    def test_rejects_non_edge(self):
        with pytest.raises(NotAMatching):
            verify_matching(gen.path(4), Matching.from_pairs(4, [(0, 2)]))

    def test_rejects_wrong_size(self):
        with pytest.raises(NotAMatching):
            verify_matching(gen.path(4), Matching.from_pairs(3, []))

    def test_rejects_inconsistent_mate(self):
        with pytest.raises(NotAMatching):
            verify_matching(gen.path(3), Matching((1, 2, 1)))


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 16), st.floats(0.05, 0.9), st.integers(0, 2**32 - 1))
def test_agrees_with_brute_force(n, p, seed):
    g = random_graph(n, p, seed)
    m = maximum_matching(g)
    assert_valid(g, m)
    assert m.size == brute_force_matching_size(g)
    verify_matching(g, m)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 14), st.floats(0.1, 0.8), st.integers(0, 2**32 - 1))
def test_any_starting_matching(n, p, seed):
    g = random_graph(n, p, seed)
    rng = random.Random(seed)
    edges = list(g.edges)
    rng.shuffle(edges)
    used: set[int] = set()
    start = []
    for u, v in edges:
        if u not in used and v not in used and rng.random() < 0.7:
            start.append((u, v))
            used |= {u, v}
    m = maximum_matching(g, Matching.from_pairs(n, start))
    assert_valid(g, m)
    assert m.size == brute_force_matching_size(g)


@pytest.mark.parametrize("seed", range(12))
def test_agrees_with_networkx_on_larger_graphs(seed):
    n = 60 + 10 * seed
    g = random_graph(n, 3.0 / n, seed)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(g.edges)
    expected = len(nx.max_weight_matching(nxg, maxcardinality=True))
    m = maximum_matching(g)
    assert_valid(g, m)
    assert m.size == expected


@pytest.mark.parametrize("seed", range(5))
def test_size_invariant_under_relabeling(seed):
    g = random_graph(40, 0.08, seed)
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    assert maximum_matching(g.relabel(perm)).size == maximum_matching(g).size
