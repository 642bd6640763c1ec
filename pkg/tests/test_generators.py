import pytest

from helpers import degeneracy

from domset.errors import ValidationError
from domset.generators import (
    GenSpec,
    SplitMix64,
    build,
    gen_d_degenerate,
    gen_gnp,
    gen_grid,
    gen_intersection_one,
    gen_random_tree,
    parse_genspec,
)
from domset.graph import Graph, serialize_graph
from domset.oracles import has_biclique
from domset.reduction import validate_intersection_one

# frozen outputs of the documented draw procedures (generated once,
# asserted forever; any PRNG or draw-order change must show up here)
GNP_5_05_42 = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4)]
TREE_6_7 = [(0, 1), (0, 2), (2, 3), (2, 4), (2, 5)]
DEGEN_8_2_3 = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 5), (2, 6),
    (2, 7), (3, 4), (4, 5), (4, 6), (5, 7),
]
SC_8_4_3_11 = ((2,), (1, 4), (0, 6), (1, 7), (3,), (5,))


class TestSplitMix64:
    def test_reference_vectors_seed_zero(self):
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_f53_range(self):
        rng = SplitMix64(99)
        for _ in range(1000):
            x = rng.next_f53()
            assert 0.0 <= x < 1.0

    def test_below_range(self):
        rng = SplitMix64(7)
        draws = [rng.next_below(5) for _ in range(200)]
        assert set(draws) == {0, 1, 2, 3, 4}


class TestGnp:
    def test_empty(self):
        assert gen_gnp(0, 0.5, 1) == Graph(0)

    def test_degenerate_probabilities(self):
        assert gen_gnp(6, 0.0, 3).m == 0
        assert gen_gnp(6, 1.0, 3).m == 15

    def test_golden_fixture(self):
        assert gen_gnp(5, 0.5, 42).edges() == GNP_5_05_42

    def test_seed_changes_output(self):
        assert gen_gnp(12, 0.5, 1) != gen_gnp(12, 0.5, 2)

    def test_bad_params(self):
        with pytest.raises(ValidationError):
            gen_gnp(-1, 0.5, 0)
        with pytest.raises(ValidationError):
            gen_gnp(5, 1.5, 0)


class TestGrid:
    def test_2x2_is_c4(self):
        assert gen_grid(2, 2) == Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])

    def test_1x4_is_p4(self):
        assert gen_grid(1, 4) == Graph(4, [(0, 1), (1, 2), (2, 3)])

    def test_3x3_counts(self):
        g = gen_grid(3, 3)
        assert (g.n, g.m) == (9, 12)

    def test_k23_free(self):
        for w, h in ((2, 2), (3, 4), (4, 4), (2, 6)):
            assert has_biclique(gen_grid(w, h), 2, 3) is None


class TestRandomTree:
    def test_tiny(self):
        assert gen_random_tree(1, 0) == Graph(1)
        assert gen_random_tree(2, 0) == Graph(2, [(0, 1)])

    def test_golden_fixture(self):
        assert gen_random_tree(6, 7).edges() == TREE_6_7

    def test_tree_shape(self):
        for seed in range(10):
            g = gen_random_tree(20, seed)
            assert g.m == g.n - 1
            # connected: everything reachable from 0
            seen = {0}
            frontier = [0]
            while frontier:
                v = frontier.pop()
                for u in g.adj[v]:
                    if u not in seen:
                        seen.add(u)
                        frontier.append(u)
            assert len(seen) == g.n

    def test_k22_free(self):
        for seed in range(12):
            assert has_biclique(gen_random_tree(20, seed), 2, 2) is None


class TestDDegenerate:
    def test_d0_edgeless(self):
        assert gen_d_degenerate(7, 0, 5).m == 0

    def test_d1_forest(self):
        for seed in range(6):
            g = gen_d_degenerate(15, 1, seed)
            assert g.m == g.n - 1
            assert degeneracy(g) <= 1

    def test_golden_fixture_and_peeling(self):
        g = gen_d_degenerate(8, 2, 3)
        assert g.edges() == DEGEN_8_2_3
        assert degeneracy(g) <= 2

    def test_insertion_order_certifies(self):
        g = gen_d_degenerate(30, 3, 11)
        for v in range(g.n):
            assert sum(1 for u in g.adj[v] if u < v) <= 3
        assert degeneracy(g) <= 3


class TestIntersectionOne:
    def test_golden_fixture(self):
        sc = gen_intersection_one(8, 4, 3, 11)
        assert sc.universe == tuple(range(8))
        assert sc.sets == SC_8_4_3_11

    def test_always_valid_and_covering(self):
        for seed in range(25):
            sc = gen_intersection_one(10, 4, 4, seed)
            assert validate_intersection_one(sc)
            assert set().union(*map(set, sc.sets)) == set(sc.universe)

    def test_singleton_only(self):
        sc = gen_intersection_one(5, 3, 1, 2)
        assert all(len(s) == 1 for s in sc.sets)

    def test_bad_params(self):
        with pytest.raises(ValidationError):
            gen_intersection_one(0, 1, 1, 0)


class TestDeterminismAndSpecs:
    def test_repeat_runs_identical(self):
        a = gen_gnp(30, 0.2, 9)
        b = gen_gnp(30, 0.2, 9)
        assert serialize_graph(a) == serialize_graph(b)
        assert gen_intersection_one(9, 3, 3, 4) == gen_intersection_one(9, 3, 3, 4)

    def test_parse_genspec(self):
        spec = parse_genspec("gnp:n=20,p=0.2,seed=7")
        assert spec == GenSpec("gnp", {"n": 20, "p": 0.2}, 7)
        assert spec.name() == "gnp:n=20,p=0.2,seed=7"
        assert build(spec) == gen_gnp(20, 0.2, 7)

    def test_parse_genspec_grid(self):
        spec = parse_genspec("grid:w=3,h=4")
        assert build(spec) == gen_grid(3, 4)
        assert spec.name() == "grid:h=4,w=3"

    def test_parse_genspec_errors(self):
        with pytest.raises(ValidationError):
            parse_genspec("mystery:n=3")
        with pytest.raises(ValidationError):
            parse_genspec("gnp:n")
        with pytest.raises(ValidationError):
            build(parse_genspec("gnp:n=3"))
        with pytest.raises(ValidationError):
            build(parse_genspec("grid:w=3,h=4,zz=1"))
