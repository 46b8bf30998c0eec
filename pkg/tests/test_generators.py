from __future__ import annotations

import pytest

from latdim import generators as gen
from latdim.graph import bfs_distances


def test_sizes():
    assert (gen.path(5).n, gen.path(5).m) == (5, 4)
    assert (gen.cycle(6).n, gen.cycle(6).m) == (6, 6)
    assert (gen.hypercube(4).n, gen.hypercube(4).m) == (16, 32)
    assert (gen.grid(3, 4).n, gen.grid(3, 4).m) == (12, 17)
    assert (gen.complete(5).m, gen.complete_bipartite(2, 3).m) == (10, 6)
    assert gen.petersen().m == 15 and all(gen.petersen().degree(v) == 3 for v in range(10))


def test_grid_vertex_layout():
    g = gen.grid(3, 4)
    assert g.has_edge(0, 1) and g.has_edge(0, 4) and not g.has_edge(3, 4)


def test_spider():
    g = gen.spider(2, 1, 3)
    assert (g.n, g.m, g.degree(0)) == (7, 6, 3)
    assert gen.leaf_count(g) == 3


def test_product_of_nothing_is_a_point():
    assert gen.product().n == 1


@pytest.mark.parametrize("n", [1, 2, 3, 10, 57])
def test_random_tree_is_a_tree(n):
    g = gen.random_tree(n, n)
    assert g.m == n - 1
    assert (bfs_distances(g, 0) >= 0).all()
    assert gen.random_tree(n, n) == g


def test_random_tree_depends_on_seed():
    assert gen.random_tree(30, 1) != gen.random_tree(30, 2)


@pytest.mark.parametrize("spec", ["grid:3:4", "random-tree:20:5", "petersen", "complete-bipartite:2:3"])
def test_from_spec(spec):
    name, *args = spec.split(":")
    assert gen.from_spec(spec) == gen.FAMILIES[name][0](*map(int, args))


@pytest.mark.parametrize("spec", ["nope:3", "grid:3", "path:x", "cycle:2", "path:0"])
def test_from_spec_rejects(spec):
    with pytest.raises(ValueError):
        gen.from_spec(spec)
