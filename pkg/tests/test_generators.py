import pytest

from circuitcover.cuts import (
    brute_force_min_odd_cut,
    edge_connectivity,
    min_odd_cut,
)
from circuitcover.errors import BadParam
from circuitcover.generators import (
    double_clique,
    gk_lower_witness,
    ladder,
    random_connected,
    two_cycles_bridge,
)
from circuitcover.graphs import is_connected


class TestLadder:
    def test_two_rungs_is_a_square(self):
        inst = ladder(2)
        assert inst.graph.n == 4 and inst.graph.m == 4
        assert inst.prescribed == frozenset()

    def test_counts(self):
        inst = ladder(4)
        assert inst.graph.n == 8 and inst.graph.m == 10
        assert inst.prescribed == frozenset({1, 2})

    @pytest.mark.parametrize("r", range(3, 9))
    def test_min_odd_cut_is_three(self, r):
        g = ladder(r).graph
        assert min_odd_cut(g).size == 3
        if g.n <= 12:
            assert brute_force_min_odd_cut(g).size == 3

    def test_prescribed_count(self):
        for r in range(3, 9):
            assert len(ladder(r).prescribed) == r - 2

    def test_bad_param(self):
        with pytest.raises(BadParam):
            ladder(1)


class TestDoubleClique:
    def test_l3_is_the_prism(self):
        inst = double_clique(3)
        assert inst.graph.n == 6 and inst.graph.m == 9
        assert len(inst.prescribed) == 4

    def test_l5_sizes(self):
        inst = double_clique(5)
        assert inst.graph.n == 10
        assert len(inst.prescribed) == 11

    @pytest.mark.parametrize("l", [3, 5, 7])
    def test_edge_connectivity_matches_l(self, l):
        assert edge_connectivity(double_clique(l).graph) == l

    def test_even_l_rejected(self):
        with pytest.raises(BadParam):
            double_clique(4)


class TestTwoCyclesBridge:
    def test_three_three(self):
        inst = two_cycles_bridge(3, 3)
        assert inst.graph.m == 7
        assert inst.prescribed == frozenset({0, 3})
        cert = min_odd_cut(inst.graph)
        assert cert.size == 1 and cert.boundary == frozenset({6})

    def test_four_five(self):
        inst = two_cycles_bridge(4, 5)
        assert inst.graph.n == 9 and inst.graph.m == 10
        assert is_connected(inst.graph)


class TestWitness:
    @pytest.mark.parametrize(
        "k, ell, prescribed", [(4, 3, 4), (5, 3, 4), (11, 5, 11)]
    )
    def test_threshold_arithmetic(self, k, ell, prescribed):
        inst = gk_lower_witness(k)
        assert f"ell-{ell}" in inst.label
        assert len(inst.prescribed) == prescribed <= k

    def test_k4_is_the_prism(self):
        assert gk_lower_witness(4).graph == double_clique(3).graph

    def test_small_k_rejected(self):
        with pytest.raises(BadParam):
            gk_lower_witness(3)


class TestRandomConnected:
    def test_threshold_one_accepts_any_connected(self):
        inst = random_connected(8, 12, 1, seed=3)
        assert is_connected(inst.graph)
        assert inst.graph.n == 8 and inst.graph.m == 12

    def test_threshold_respected(self):
        inst = random_connected(10, 20, 3, seed=7)
        cert = min_odd_cut(inst.graph)
        assert cert is None or cert.size >= 3

    def test_threshold_two_means_bridgeless(self):
        from circuitcover.graphs import bridges_and_2ec_components

        for seed in range(5):
            g = random_connected(9, 14, 2, seed=seed).graph
            bridges, _ = bridges_and_2ec_components(g, g.all_edges())
            assert not bridges

    def test_deterministic_per_seed(self):
        a = random_connected(9, 16, 3, seed=21).graph
        b = random_connected(9, 16, 3, seed=21).graph
        assert a == b

    def test_high_threshold_falls_back_to_even_degrees(self):
        inst = random_connected(40, 80, 9, seed=1)
        g = inst.graph
        assert g.n == 40 and g.m == 80 and is_connected(g)
        assert min_odd_cut(g) is None or min_odd_cut(g).size >= 9

    def test_infeasible_params_rejected(self):
        with pytest.raises(BadParam):
            random_connected(5, 3, 1, seed=0)
