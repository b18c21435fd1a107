import pytest

from circuitcover.errors import SegmentNotPath
from circuitcover.graphs import Graph, Trail, validate_trail
from circuitcover.segments import canonical_rotation, normalize_circuit, segment

from conftest import bowtie, cycle_graph


def three_segment_hub():
    """Circuit whose three segments pairwise share the hub vertex 6."""
    edges = [
        (0, 1), (1, 6), (6, 2),  # segment 1
        (2, 3),                  # separator e_1
        (3, 6), (6, 4),          # segment 2
        (4, 5),                  # separator e_2
        (5, 6),                  # segment 3
        (6, 0),                  # separator e_3
    ]
    g = Graph.from_edges(7, edges)
    h = Trail((0, 1, 6, 2, 3, 6, 4, 5, 6, 0), tuple(range(9)))
    return g, h, frozenset({3, 6, 8})


class TestSegment:
    def test_triangle_single_marked_edge(self):
        g = cycle_graph(3)
        h = Trail((0, 1, 2, 0), (0, 1, 2))
        seg = segment(g, h, {1})
        assert seg.k == 1
        assert seg.sep_ids == (1,)
        assert len(seg.seg_paths[0]) == 3  # a path on the other two edges

    def test_three_segments_sharing_a_hub(self):
        g, h, s = three_segment_hub()
        seg = segment(g, h, s)
        assert seg.k == 3
        assert seg.seg_paths == ((0, 1, 6, 2), (3, 6, 4), (5, 6))
        for a in range(3):
            for b in range(a + 1, 3):
                assert set(seg.seg_paths[a]) & set(seg.seg_paths[b]) == {6}

    def test_bowtie_with_marked_edges_at_shared_vertex(self):
        g = bowtie()
        h = Trail((0, 1, 2, 0, 3, 4, 0), (0, 2, 1, 3, 5, 4))
        seg = segment(g, h, {1, 3})
        assert seg.k == 2
        assert seg.seg_paths == ((3, 4, 0, 1, 2), (0,))

    def test_rejects_segment_with_repeated_vertex(self):
        g = bowtie()
        h = Trail((0, 1, 2, 0, 3, 4, 0), (0, 2, 1, 3, 5, 4))
        with pytest.raises(SegmentNotPath):
            segment(g, h, {5})

    def test_canonical_rotation_puts_smallest_separator_first(self):
        g, h, s = three_segment_hub()
        rot = canonical_rotation(h, s)
        slots = [i for i, e in enumerate(rot.edges) if e in s]
        assert rot.edges[slots[0]] == min(s)
        assert slots[-1] == len(rot.edges) - 1


class TestNormalize:
    def test_fixpoint_on_clean_circuit(self):
        g, h, s = three_segment_hub()
        out = normalize_circuit(g, h, s)
        assert len(out) == len(h)
        segment(g, out, s)  # must not raise

    def test_detour_excised(self):
        g = bowtie()
        h = Trail((0, 1, 2, 0, 3, 4, 0), (0, 2, 1, 3, 5, 4))
        out = normalize_circuit(g, h, {5})
        assert out.vertices == (4, 0, 3, 4)
        assert out.edges == (4, 3, 5)
        assert len(out) == len(h) - 3

    def test_loop_spanning_a_separator_is_kept(self):
        g = bowtie()
        h = Trail((0, 1, 2, 0, 3, 4, 0), (0, 2, 1, 3, 5, 4))
        # vertex 0 repeats across segments; with separators on both triangle
        # sides the repeat never falls inside one segment
        out = normalize_circuit(g, h, {1, 3})
        assert len(out) == len(h)
        validate_trail(g, out)

    def test_result_still_covers_separators(self):
        g = bowtie()
        h = Trail((0, 1, 2, 0, 3, 4, 0), (0, 2, 1, 3, 5, 4))
        out = normalize_circuit(g, h, {5})
        assert {5} <= out.edge_set()
        assert out.is_closed
