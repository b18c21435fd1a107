"""Decompose a circuit through prescribed edges into separator-free segments.

A circuit H through separators e_1..e_k is rotated into the canonical form
H_1 e_1 H_2 e_2 ... H_k e_k (e_1 = the separator with the smallest edge id).
Each segment must be a path; normalize_circuit excises closed detours inside
segments to establish that, which is the only structural property the
rerouting machinery needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import SegmentNotPath
from .graphs import Graph, Trail, validate_trail


def _separator_slots(h: Trail, s_prefix: frozenset) -> list[int]:
    slots = [i for i, eid in enumerate(h.edges) if eid in s_prefix]
    found = {h.edges[i] for i in slots}
    if found != s_prefix:
        raise ValueError(f"circuit is missing prescribed edges {sorted(s_prefix - found)}")
    return slots


def _rotate_closed(h: Trail, last_slot: int) -> Trail:
    """Rotate a closed trail so the edge at last_slot becomes its final edge."""
    if not h.is_closed:
        raise ValueError("can only rotate a closed trail")
    w = len(h.edges)
    cut = (last_slot + 1) % w
    if cut == 0:
        return h
    verts = h.vertices[cut:-1] + h.vertices[: cut + 1]
    edges = h.edges[cut:] + h.edges[:cut]
    return Trail(verts, edges)


def canonical_rotation(h: Trail, s_prefix: Iterable[int]) -> Trail:
    """Rotate so separators appear in circuit order with the smallest-id
    separator first; the closing edge is then the last separator."""
    s_set = frozenset(s_prefix)
    slots = _separator_slots(h, s_set)
    first = min(slots, key=lambda i: h.edges[i])
    idx = slots.index(first)
    prev = slots[idx - 1]  # cyclic predecessor separator becomes the last edge
    return _rotate_closed(h, prev)


@dataclass(frozen=True)
class SegmentedCircuit:
    """Canonically rotated circuit with its segments H_1..H_k.

    Segment j (0-based) spans trail vertex indices seg_bounds[j] inclusive;
    its separator follows immediately.  Segments are vertex-paths; distinct
    segments may share vertices.
    """

    graph: Graph
    trail: Trail
    sep_slots: tuple[int, ...]  # edge-slot positions of e_1..e_k
    sep_ids: tuple[int, ...]  # edge ids of e_1..e_k in circuit order

    @property
    def k(self) -> int:
        return len(self.sep_ids)

    @cached_property
    def seg_bounds(self) -> tuple[tuple[int, int], ...]:
        bounds = []
        start = 0
        for slot in self.sep_slots:
            bounds.append((start, slot))
            start = slot + 1
        return tuple(bounds)

    @cached_property
    def seg_paths(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            self.trail.vertices[a : b + 1] for a, b in self.seg_bounds
        )

    @cached_property
    def pos_in_seg(self) -> tuple[dict, ...]:
        return tuple(
            {v: i for i, v in enumerate(path)} for path in self.seg_paths
        )

    @cached_property
    def h_vertices(self) -> frozenset:
        return frozenset(self.trail.vertices)

    @cached_property
    def h_edges(self) -> frozenset:
        return frozenset(self.trail.edges)

    def segments_containing(self, v: int) -> list[int]:
        return [j for j in range(self.k) if v in self.pos_in_seg[j]]

    def ins(self, j: int, vertices: frozenset) -> frozenset:
        """Vertices of the given set lying on segment j."""
        return frozenset(v for v in self.seg_paths[j] if v in vertices)

    def cl_span(self, j: int, vertices: frozenset) -> tuple[int, int] | None:
        """Closure of the set on segment j, as a position interval."""
        hits = [self.pos_in_seg[j][v] for v in vertices if v in self.pos_in_seg[j]]
        if not hits:
            return None
        return min(hits), max(hits)

    def cl_vertices(self, j: int, vertices: frozenset) -> frozenset:
        span = self.cl_span(j, vertices)
        if span is None:
            return frozenset()
        lo, hi = span
        return frozenset(self.seg_paths[j][lo : hi + 1])

    def closure(self, vertices: frozenset) -> frozenset:
        out: set = set()
        for j in range(self.k):
            out |= self.cl_vertices(j, vertices)
        return frozenset(out)

    def frontier(self, j: int, vertices: frozenset) -> frozenset:
        span = self.cl_span(j, vertices)
        if span is None:
            return frozenset()
        lo, hi = span
        return frozenset({self.seg_paths[j][lo], self.seg_paths[j][hi]})


def segment(g: Graph, h: Trail, s_prefix: Iterable[int]) -> SegmentedCircuit:
    """Decompose circuit h with the edges of s_prefix as separators.

    Raises SegmentNotPath when a segment repeats a vertex; run
    normalize_circuit first.
    """
    s_set = frozenset(s_prefix)
    if not s_set:
        raise ValueError("need at least one separator edge")
    validate_trail(g, h)
    if not h.is_closed:
        raise ValueError("h must be a closed trail")
    rotated = canonical_rotation(h, s_set)
    slots = _separator_slots(rotated, s_set)
    seg = SegmentedCircuit(
        graph=g,
        trail=rotated,
        sep_slots=tuple(slots),
        sep_ids=tuple(rotated.edges[i] for i in slots),
    )
    assert seg.sep_slots[-1] == len(rotated.edges) - 1
    for j, path in enumerate(seg.seg_paths):
        if len(set(path)) != len(path):
            raise SegmentNotPath(j)
    return seg


def normalize_circuit(g: Graph, h: Trail, s_prefix: Iterable[int]) -> Trail:
    """Excise closed detours inside segments until every segment is a path.

    Detours that span a separator edge are kept; the result is a circuit
    through s_prefix no longer than h.
    """
    s_set = frozenset(s_prefix)
    validate_trail(g, h)
    if not h.is_closed:
        raise ValueError("h must be a closed trail")
    cur = canonical_rotation(h, s_set)
    while True:
        slots = _separator_slots(cur, s_set)
        cut = _first_detour(cur, slots)
        if cut is None:
            return cur
        i1, i2 = cut
        verts = cur.vertices[: i1 + 1] + cur.vertices[i2 + 1 :]
        edges = cur.edges[:i1] + cur.edges[i2:]
        cur = Trail(verts, edges)


def _first_detour(h: Trail, sep_slots: list[int]) -> tuple[int, int] | None:
    """First within-segment repeated vertex, as a vertex-index pair."""
    start = 0
    for slot in sep_slots:
        seen: dict[int, int] = {}
        for i in range(start, slot + 1):
            v = h.vertices[i]
            if v in seen:
                return seen[v], i
            seen[v] = i
        start = slot + 1
    return None
