from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import partial_cubes, small_bipartite
from latdim import generators as gen
from latdim.embed import (
    STAGES,
    LatticeEmbedding,
    certify_isometry,
    check_path_invariants,
    coordinates,
    embed,
    hypercube_from_embedding,
    matching_from_embedding,
    path_decomposition,
    verify_isometry,
)
from latdim.errors import (
    CycleDetected,
    IsometryViolation,
    Rejected,
    SemicubeLookupFailed,
)
from latdim.graph import Graph, all_pairs_distances
from latdim.matching import Matching
from latdim.oracle import oracle_semicube_count_distance
from latdim.partial_cube import recognize, verify_labeling
from latdim.semicube import semicubes


def coords(g: Graph) -> list[tuple[int, ...]]:
    emb = embed(g).embedding
    return [emb.point(v) for v in range(g.n)]


class TestDecomposition:
    def test_p3_single_path(self):
        r = embed(gen.path(3))
        assert r.matching.pairs == ((1, 2),)
        assert r.decomposition.paths == ((0, 1, 2, 3),)
        assert r.decomposition.lengths == (3,)

    def test_c6_complement_pairs(self):
        r = embed(gen.cycle(6))
        assert r.matching.size == 0
        assert r.decomposition.paths == ((0, 1), (2, 3), (4, 5))

    def test_k13(self):
        r = embed(gen.star(3))
        assert r.matching.pairs == ((0, 2),)
        assert r.decomposition.paths == ((1, 0, 2, 3), (4, 5))

    def test_complement_matched_is_a_cycle(self):
        with pytest.raises(CycleDetected):
            path_decomposition(4, Matching.from_pairs(4, [(0, 1)]))

    def test_closed_alternation_is_a_cycle(self):
        with pytest.raises(CycleDetected):
            path_decomposition(4, Matching.from_pairs(4, [(1, 2), (3, 0)]))

    def test_odd_vertex_count(self):
        with pytest.raises(ValueError):
            path_decomposition(3, Matching.from_pairs(3, []))

    def test_invariants_catch_non_nested_chain(self):
        fam = semicubes(recognize(gen.path(3)))
        # {2} is not inside {0}: pairing 0:1 with 1:1 breaks the chain
        pd = path_decomposition(4, Matching.from_pairs(4, [(1, 3)]))
        with pytest.raises(CycleDetected):
            check_path_invariants(pd, fam)

    @pytest.mark.parametrize("g", partial_cubes(), ids=repr)
    def test_invariants_hold(self, g):
        r = embed(g)
        check_path_invariants(r.decomposition, r.family)
        assert all(length % 2 == 1 for length in r.decomposition.lengths)
        assert sorted(x for p in r.decomposition.paths for x in p) == list(range(2 * r.tau))
        assert [min(p) for p in r.decomposition.paths] == sorted(min(p) for p in r.decomposition.paths)
        assert all(p[0] < p[-1] for p in r.decomposition.paths)


class TestCoordinates:
    def test_p3(self):
        assert coords(gen.path(3)) == [(0,), (1,), (2,)]

    def test_k13(self):
        assert coords(gen.star(3)) == [(1, 0), (0, 0), (2, 0), (1, 1)]

    def test_c4(self):
        assert sorted(coords(gen.cycle(4))) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_single_vertex(self):
        r = embed(Graph(1))
        assert (r.tau, r.d, r.embedding.coords.shape) == (0, 0, (1, 0))

    @pytest.mark.parametrize("n", [2, 3, 7, 20])
    def test_paths_are_one_dimensional(self, n):
        assert coords(gen.path(n)) == [(v,) for v in range(n)]

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_even_cycles(self, k):
        r = embed(gen.cycle(2 * k))
        assert (r.tau, r.d) == (k, k)

    def test_star5(self):
        assert embed(gen.star(5)).d == 3

    @pytest.mark.parametrize("g", partial_cubes(), ids=repr)
    def test_ranges_sum_to_tau(self, g):
        r = embed(g)
        assert sum(hi - lo for lo, hi in r.embedding.ranges) == r.tau
        assert all(lo == 0 for lo, _ in r.embedding.ranges)
        assert r.d <= r.tau
        assert r.d == r.tau - r.matching_size


class TestIsometry:
    @pytest.mark.parametrize("g", partial_cubes(), ids=repr)
    def test_all_pairs(self, g):
        r = embed(g, all_pairs_distances(g))
        verify_isometry(g, all_pairs_distances(g), r.embedding)

    def test_violation_reports_pair(self):
        g = gen.path(3)
        bad = LatticeEmbedding(np.array([[0], [1], [1]]))
        with pytest.raises(IsometryViolation) as info:
            verify_isometry(g, all_pairs_distances(g), bad)
        assert (info.value.u, info.value.v) == (0, 2)
        with pytest.raises(IsometryViolation):
            certify_isometry(g, bad)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            verify_isometry(gen.path(3), all_pairs_distances(gen.path(3)), LatticeEmbedding(np.zeros((2, 1))))

    def test_folded_cycle_fails_certificate(self):
        # C6 squeezed into the plane as a 2x3 rectangle ring
        g = gen.cycle(6)
        ring = LatticeEmbedding(np.array([[0, 0], [1, 0], [2, 0], [2, 1], [1, 1], [0, 1]]))
        with pytest.raises(IsometryViolation):
            verify_isometry(g, all_pairs_distances(g), ring)
        with pytest.raises(IsometryViolation):
            certify_isometry(g, ring)

    def test_semicube_count_distance(self):
        for g in partial_cubes()[:12]:
            fam = embed(g).family
            dm = all_pairs_distances(g)
            for u in range(g.n):
                for v in range(g.n):
                    assert oracle_semicube_count_distance(fam, u, v) == dm[u, v]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, len(small_bipartite()) - 1), st.integers(0, 2**32 - 1))
def test_certificate_agrees_with_all_pairs_on_random_points(index, seed):
    g = small_bipartite()[index]
    rng = random.Random(seed)
    emb = LatticeEmbedding(np.array([[rng.randint(0, 2) for _ in range(3)] for _ in range(g.n)]))

    def ok(fn) -> bool:
        try:
            fn()
        except IsometryViolation:
            return False
        return True

    dm = all_pairs_distances(g)
    assert ok(lambda: certify_isometry(g, emb)) == ok(lambda: verify_isometry(g, dm, emb))


class TestRoundTrips:
    def test_p3_hypercube(self):
        lab = hypercube_from_embedding(embed(gen.path(3)).embedding)
        assert [lab.label(v) for v in range(3)] == ["00", "10", "11"]

    def test_p3_matching(self):
        r = embed(gen.path(3))
        assert matching_from_embedding(r.embedding, r.family).pairs == ((1, 2),)

    def test_lookup_failure(self):
        r = embed(gen.path(3))
        with pytest.raises(SemicubeLookupFailed):
            matching_from_embedding(LatticeEmbedding(np.array([[0], [2], [1]])), r.family)

    @pytest.mark.parametrize("g", partial_cubes(), ids=repr)
    def test_both_directions(self, g):
        r = embed(g)
        lab = hypercube_from_embedding(r.embedding)
        assert lab.tau == r.tau
        verify_labeling(g, all_pairs_distances(g), lab)
        m = matching_from_embedding(r.embedding, r.family)
        assert m.size == r.tau - r.d
        assert m == r.matching

    def test_coordinates_from_recovered_matching(self):
        g = gen.grid(3, 4)
        r = embed(g)
        m = matching_from_embedding(r.embedding, r.family)
        emb = coordinates(path_decomposition(len(r.family), m), r.family, g)
        assert emb == r.embedding


class TestLaws:
    @pytest.mark.parametrize("seed", range(20))
    def test_tree_dimension_is_half_the_leaves(self, seed):
        g = gen.random_tree(3 + seed * 7, seed)
        assert embed(g).d == -(-gen.leaf_count(g) // 2)

    @pytest.mark.parametrize("k", range(1, 6))
    def test_hypercubes(self, k):
        r = embed(gen.hypercube(k))
        assert r.d == r.tau == k

    @pytest.mark.parametrize("a,b", [(2, 2), (2, 5), (3, 3), (4, 7)])
    def test_grids(self, a, b):
        r = embed(gen.grid(a, b))
        assert (r.d, r.tau) == (2, a + b - 2)

    def test_rejected_input(self):
        with pytest.raises(Rejected):
            embed(gen.complete_bipartite(2, 3))

    def test_timings_cover_every_stage(self):
        assert tuple(embed(gen.grid(3, 3)).timings) == STAGES


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["path", "cycle", "tree"]), min_size=1, max_size=3), st.integers(0, 10**6))
def test_products_embed_isometrically(kinds, seed):
    rng = random.Random(seed)
    factors = []
    for kind in kinds:
        if kind == "path":
            factors.append(gen.path(rng.randint(2, 5)))
        elif kind == "cycle":
            factors.append(gen.cycle(2 * rng.randint(2, 4)))
        else:
            factors.append(gen.random_tree(rng.randint(3, 8), rng.randrange(1000)))
    g = gen.product(*factors)
    dm = all_pairs_distances(g)
    r = embed(g, dm)
    verify_isometry(g, dm, r.embedding)
    check_path_invariants(r.decomposition, r.family)
    assert r.d == r.tau - r.matching_size


@pytest.mark.parametrize("seed", range(4))
def test_dimension_survives_relabeling(seed):
    g = gen.product(gen.random_tree(8, seed), gen.cycle(6))
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    assert embed(g.relabel(perm)).d == embed(g).d
