import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circuitcover.errors import CutTooSmall, NotConnected, NotEven
from circuitcover.graphs import (
    Graph,
    Trail,
    bridges_and_2ec_components,
    connected_components,
    contract_subgraph,
    edge_boundary,
    euler_circuit,
    is_even_subgraph,
    subdivide_edge,
    trail_concat,
    two_edge_disjoint_paths,
    validate_trail,
    verify_circuit,
)

from conftest import bowtie, complete_graph, connected_graphs, cycle_graph, path_graph


class TestGraphInvariants:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_parallel_edge(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_inverts_edge_list(self):
        g = complete_graph(4)
        for v in range(4):
            for w, eid in g.adjacency[v]:
                assert set(g.edges[eid]) == {v, w}


class TestEdgeBoundary:
    def test_pendant_vertex_of_path(self):
        g = path_graph(3)  # a-b-c
        assert edge_boundary(g, {0}) == frozenset({0})

    def test_empty_side(self):
        assert edge_boundary(cycle_graph(5), set()) == frozenset()

    def test_ladder_inner_rail_vertex(self):
        from circuitcover.generators import ladder

        g = ladder(4).graph
        # independently: the boundary of one vertex is its incident edges
        incident = frozenset(eid for _, eid in g.adjacency[1])
        assert edge_boundary(g, {1}) == incident
        assert len(incident) == 3

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            edge_boundary(path_graph(2), {5})

    @given(connected_graphs(), st.data())
    @settings(max_examples=60)
    def test_boundary_parity_matches_odd_degrees(self, g, data):
        side = data.draw(st.sets(st.integers(0, g.n - 1)))
        odd_inside = sum(1 for v in side if g.degree(v) % 2 == 1)
        assert len(edge_boundary(g, side)) % 2 == odd_inside % 2


class TestEvenSubgraph:
    def test_full_cycle_is_even(self):
        g = cycle_graph(6)
        assert is_even_subgraph(g, range(6))

    def test_single_edge_is_odd(self):
        assert not is_even_subgraph(cycle_graph(6), {0})

    def test_two_triangles_of_bridged_graph(self):
        from conftest import triangles_with_bridge

        g = triangles_with_bridge()
        assert is_even_subgraph(g, {0, 1, 2, 3, 4, 5})
        assert not is_even_subgraph(g, {0, 1, 2, 6})


class TestComponents:
    def test_cycle_is_one_component(self):
        g = cycle_graph(6)
        assert connected_components(g, range(6)) == [frozenset(range(6))]

    def test_disjoint_triangles(self):
        g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        assert len(connected_components(g)) == 2

    def test_ladder_minus_rungs_leaves_two_rails(self):
        from circuitcover.generators import ladder

        g = ladder(4).graph
        rails = g.all_edges() - frozenset(range(4))
        comps = connected_components(g, rails)
        assert sorted(map(sorted, comps)) == [[0, 1, 2, 3], [4, 5, 6, 7]]

    def test_restriction_excludes_isolated_vertices(self):
        g = path_graph(4)
        comps = connected_components(g, {0})
        assert comps == [frozenset({0, 1})]


class TestBridges:
    def test_tree_is_all_bridges(self):
        g = path_graph(5)
        bridges, comps = bridges_and_2ec_components(g, g.all_edges())
        assert bridges == g.all_edges()
        assert comps == []

    def test_cycle_has_none(self):
        g = cycle_graph(5)
        bridges, comps = bridges_and_2ec_components(g, g.all_edges())
        assert bridges == frozenset()
        assert len(comps) == 1 and comps[0].edges == g.all_edges()

    def test_star_left_by_removing_triangle_from_k4(self):
        g = complete_graph(4)
        # remove the triangle on {1,2,3}; the rest is the star at 0
        star = g.all_edges() - frozenset(
            eid for eid, (u, v) in enumerate(g.edges) if u != 0 and v != 0
        )
        bridges, comps = bridges_and_2ec_components(g, star)
        assert bridges == star and len(bridges) == 3
        assert comps == []

    @given(connected_graphs())
    @settings(max_examples=60)
    def test_bridge_removal_disconnects(self, g):
        bridges, _ = bridges_and_2ec_components(g, g.all_edges())
        for eid in bridges:
            rest = g.all_edges() - {eid}
            u, v = g.endpoints(eid)
            comps = connected_components(g, rest) + [
                frozenset({w}) for w in (u, v) if all(e == eid for _, e in g.adjacency[w])
            ]
            assert not any(u in c and v in c for c in comps)


class TestTwoEdgeDisjointPaths:
    def test_cycle_splits_in_two(self):
        g = cycle_graph(4)
        p1, p2 = two_edge_disjoint_paths(g, 0, 2)
        assert not (p1.edge_set() & p2.edge_set())
        assert {p1.start, p1.end} == {0, 2} and {p2.start, p2.end} == {0, 2}

    def test_path_endpoints_fail_with_bridge_witness(self):
        g = path_graph(4)
        with pytest.raises(CutTooSmall) as exc:
            two_edge_disjoint_paths(g, 0, 3)
        assert len(exc.value.witness) == 1

    def test_k4_any_pair(self):
        g = complete_graph(4)
        p1, p2 = two_edge_disjoint_paths(g, 0, 3)
        assert not (p1.edge_set() & p2.edge_set())

    @given(connected_graphs(min_n=3))
    @settings(max_examples=60)
    def test_concatenation_is_a_circuit(self, g):
        s, t = 0, g.n - 1
        try:
            p1, p2 = two_edge_disjoint_paths(g, s, t)
        except CutTooSmall as exc:
            assert len(exc.witness) <= 1
            return
        circuit = trail_concat(p1, p2.reverse())
        validate_trail(g, circuit)
        assert circuit.is_closed
        assert s in circuit.vertices and t in circuit.vertices


class TestEulerCircuit:
    def test_triangle(self):
        g = cycle_graph(3)
        t = euler_circuit(g, range(3))
        assert t.is_closed and sorted(t.edges) == [0, 1, 2]

    def test_bowtie_repeats_shared_vertex(self):
        g = bowtie()
        t = euler_circuit(g, g.all_edges())
        assert t.vertices == (0, 1, 2, 0, 3, 4, 0)
        assert sorted(t.edges) == list(range(6))

    def test_disjoint_triangles_not_connected(self):
        g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        with pytest.raises(NotConnected):
            euler_circuit(g, g.all_edges())

    def test_odd_degree_rejected(self):
        with pytest.raises(NotEven):
            euler_circuit(path_graph(3), {0, 1})

    @given(connected_graphs())
    @settings(max_examples=60)
    def test_covers_every_chosen_edge_exactly_once(self, g):
        # largest even subgraph test: strip a spanning-tree parity fix
        from circuitcover.jaeger import extend_to_even_subgraph
        from circuitcover.jaeger import EvenExtension

        ext = extend_to_even_subgraph(g, frozenset())
        assert isinstance(ext, EvenExtension)
        f = ext.even_set
        if not f:
            return
        comps = connected_components(g, f)
        target = comps[0]
        f = frozenset(
            eid for eid in f if g.edges[eid][0] in target and g.edges[eid][1] in target
        )
        t = euler_circuit(g, f)
        assert sorted(t.edges) == sorted(f)


class TestContraction:
    def test_singleton_contraction_is_identity(self):
        g = complete_graph(4)
        c = contract_subgraph(g, {2})
        assert c.graph == g
        assert c.vertex_map == (0, 1, 2, 3)

    def test_prism_triangle_contracts_to_k4(self):
        from circuitcover.generators import double_clique

        g = double_clique(3).graph
        c = contract_subgraph(g, {3, 4, 5})
        assert c.graph.n == 4 and c.graph.m == 6
        degs = sorted(c.graph.degree(v) for v in range(4))
        assert degs == [3, 3, 3, 3]

    def test_contract_everything(self):
        g = cycle_graph(5)
        c = contract_subgraph(g, range(5))
        assert c.graph.n == 1 and c.graph.m == 0

    def test_disconnected_set_rejected(self):
        with pytest.raises(NotConnected):
            contract_subgraph(path_graph(3), {0, 2})

    @given(connected_graphs(min_n=3), st.data())
    @settings(max_examples=60)
    def test_cut_lifting(self, g, data):
        v0 = data.draw(st.integers(0, g.n - 1))
        radius = data.draw(st.integers(0, 1))
        w = {v0} | ({x for x, _ in g.adjacency[v0]} if radius else set())
        c = contract_subgraph(g, w)
        if c.graph.n < 2:
            return
        side = data.draw(
            st.sets(st.integers(0, c.graph.n - 1), min_size=1, max_size=c.graph.n - 1)
        )
        if len(side) == c.graph.n:
            return
        new_cut = edge_boundary(c.graph, side)
        lifted = edge_boundary(g, c.lift_side(side))
        assert lifted == frozenset(
            orig for eid in new_cut for orig in c.edge_classes[eid]
        )


class TestSubdivide:
    def test_halves_reconnect(self):
        g = cycle_graph(3)
        g2, w, halves = subdivide_edge(g, 1)
        assert g2.n == 4 and g2.m == 4
        u, v = g.endpoints(1)
        assert set(g2.endpoints(halves[0])) == {u, w}
        assert set(g2.endpoints(halves[1])) == {w, v}


class TestVerifyCircuit:
    def test_full_cycle_passes(self):
        g = cycle_graph(6)
        t = euler_circuit(g, range(6))
        assert verify_circuit(g, t, {0, 3})

    def test_duplicate_edge_rejected(self):
        g = path_graph(3)
        t = Trail((0, 1, 0), (0, 0))
        res = verify_circuit(g, t, set())
        assert not res and "duplicate" in res.reason

    def test_uncovered_edge_reported(self):
        g = bowtie()
        t = Trail((0, 1, 2, 0), (0, 2, 1))
        res = verify_circuit(g, t, {5})
        assert not res and "not covered" in res.reason

    def test_open_walk_rejected(self):
        g = path_graph(3)
        res = verify_circuit(g, Trail((0, 1), (0,)), set())
        assert not res and "closed" in res.reason
