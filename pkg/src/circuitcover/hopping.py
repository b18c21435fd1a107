"""Reach fixpoints, coherent trails, and the rerouting descent.

This implements the bridge case of the circuit extension: given a circuit H
through k prescribed edges and a further edge e=ab that is a bridge of
G-E(H), either produce a circuit through all k+1 edges or an odd cut of size
at most k+1.

Vocabulary (all relative to the segmented circuit H and the excluded e):
  admissible trail  - trail in G-E(H)-e whose inner vertices avoid V(H);
  reach of X        - H-vertices admissibly reachable from X;
  levels A_i / B_i  - iterated reach closures grown from a and b;
  coherent trail    - a trail through all separators satisfying the three
                      invariants C1-C3 checked in check_coherent.

The descent repeatedly reroutes a coherent trail to strictly smaller levels
until both levels hit zero, at which point the circuit assembles from the
trail, the two entry witnesses, and e itself.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, NamedTuple

from .cuts import CutCertificate, certify
from .errors import CoherenceViolated, DescentStalled, NoSharedSegment
from .graphs import Graph, Trail, trail_concat, validate_trail
from .segments import SegmentedCircuit, segment


class SpanWitness(NamedTuple):
    """Where a segment-closure subpath sits inside a coherent trail.

    Trail positions q_lo..q_hi hold the segment positions s_lo..s_hi in
    order (step=+1) or reversed (step=-1).
    """

    q_lo: int
    q_hi: int
    s_lo: int
    s_hi: int
    step: int


@dataclass(frozen=True)
class ReachState:
    """Level sets grown from both endpoints of the excluded edge, with one
    recorded admissible witness trail per reached vertex."""

    graph: Graph
    excluded: int
    a: int
    b: int
    a_levels: tuple[frozenset, ...]  # A_0 = empty, A_1, ... (stabilized)
    b_levels: tuple[frozenset, ...]
    a_witness: dict
    b_witness: dict

    def level(self, side: str, i: int) -> frozenset:
        levels = self.a_levels if side == "A" else self.b_levels
        return levels[min(i, len(levels) - 1)]

    def witness(self, side: str, v: int) -> Trail:
        return (self.a_witness if side == "A" else self.b_witness)[v]

    def endpoint(self, side: str) -> int:
        return self.a if side == "A" else self.b

    def swapped(self) -> "ReachState":
        return ReachState(
            graph=self.graph,
            excluded=self.excluded,
            a=self.b,
            b=self.a,
            a_levels=self.b_levels,
            b_levels=self.a_levels,
            a_witness=self.b_witness,
            b_witness=self.a_witness,
        )

    def first_hit_level(self, seg: SegmentedCircuit, side: str, j: int) -> int | None:
        levels = self.a_levels if side == "A" else self.b_levels
        for i in range(1, len(levels)):
            if seg.ins(j, levels[i]):
                return i
        return None


def compute_reach(
    g: Graph, seg: SegmentedCircuit, excluded: int, x: Iterable[int]
) -> tuple[frozenset, dict]:
    """H-vertices admissibly reachable from x, each with one witness trail.

    Search runs in G-E(H)-excluded; vertices of V(H) outside x absorb the
    search, so witness paths have all inner vertices off H.
    """
    sources = sorted(set(x))
    reached: dict[int, Trail] = {}
    parent: dict[int, tuple[int, int]] = {}
    queue = deque()
    visited = set(sources)
    for v in sources:
        queue.append(v)
        if v in seg.h_vertices:
            reached[v] = Trail((v,))
    banned = seg.h_edges | {excluded}

    def path_to(v: int) -> Trail:
        verts = [v]
        edges = []
        while v in parent:
            pv, eid = parent[v]
            verts.append(pv)
            edges.append(eid)
            v = pv
        return Trail(tuple(reversed(verts)), tuple(reversed(edges)))

    source_set = frozenset(sources)
    while queue:
        v = queue.popleft()
        if v in seg.h_vertices and v not in source_set:
            continue  # absorbing: admissible trails end at H-vertices
        for w, eid in g.adjacency[v]:
            if eid in banned or w in visited:
                continue
            visited.add(w)
            parent[w] = (v, eid)
            queue.append(w)
            if w in seg.h_vertices:
                reached[w] = path_to(w)
    return frozenset(reached), reached


def _admissible_component(
    g: Graph, seg: SegmentedCircuit, excluded: int, x: Iterable[int]
) -> frozenset:
    """All vertices admissibly reachable from x (H-vertices absorb)."""
    sources = frozenset(x)
    visited = set(sources)
    queue = deque(sorted(sources))
    banned = seg.h_edges | {excluded}
    while queue:
        v = queue.popleft()
        if v in seg.h_vertices and v not in sources:
            continue
        for w, eid in g.adjacency[v]:
            if eid not in banned and w not in visited:
                visited.add(w)
                queue.append(w)
    return frozenset(visited)


def hopping_fixpoint(
    g: Graph, seg: SegmentedCircuit, excluded: int, a: int, b: int
) -> ReachState | CutCertificate:
    """Iterate both reach sequences to their joint fixpoint.

    Returns the state when some segment is hit from both sides; otherwise
    the two hit-sets are segment-disjoint and the side hitting fewer
    segments yields an odd cut of size at most k+1.
    """

    def grow(start: int) -> tuple[tuple[frozenset, ...], dict]:
        levels = [frozenset()]
        witness: dict[int, Trail] = {}
        cur, wit = compute_reach(g, seg, excluded, {start})
        witness.update(wit)
        levels.append(cur)
        while True:
            nxt, wit = compute_reach(g, seg, excluded, seg.closure(cur))
            nxt |= cur
            if nxt == cur:
                return tuple(levels), witness
            for v, t in wit.items():
                witness.setdefault(v, t)
            levels.append(nxt)
            cur = nxt

    a_levels, a_witness = grow(a)
    b_levels, b_witness = grow(b)
    a_full, b_full = a_levels[-1], b_levels[-1]
    shared = [
        j for j in range(seg.k) if seg.ins(j, a_full) and seg.ins(j, b_full)
    ]
    if shared:
        return ReachState(g, excluded, a, b, a_levels, b_levels, a_witness, b_witness)
    hits_a = sum(1 for j in range(seg.k) if seg.ins(j, a_full))
    hits_b = sum(1 for j in range(seg.k) if seg.ins(j, b_full))
    if hits_a <= hits_b:
        side_vertices, endpoint, other = a_full, a, b
    else:
        side_vertices, endpoint, other = b_full, b, a
    region = _admissible_component(g, seg, excluded, set(side_vertices) | {endpoint})
    cert = certify(g, region)
    if other in region or excluded not in cert.boundary:
        raise CoherenceViolated("fixpoint region leaked across the excluded edge")
    if not cert.odd or cert.size > seg.k + 1:
        raise CoherenceViolated(
            f"fixpoint cut invalid: size={cert.size}, k+1={seg.k + 1}"
        )
    return cert


@dataclass
class CoherentTrail:
    """Trail through all separators with per-level bookkeeping.

    intervals maps (side, segment) to the SpanWitness of that side's
    segment closure inside the trail; brackets maps each non-H edge slot to
    the (r, t) positions of the admissible subtrail containing it.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    n: int
    m: int
    intervals: dict
    brackets: dict

    @property
    def w(self) -> int:
        return len(self.edges)

    @property
    def level(self) -> tuple[int, int]:
        return (self.n, self.m)

    def trail(self) -> Trail:
        return Trail(self.vertices, self.edges)


def check_coherent(q: CoherentTrail, state: ReachState, seg: SegmentedCircuit) -> None:
    """Assert the three coherence conditions plus bookkeeping consistency."""
    g = state.graph
    t = q.trail()
    validate_trail(g, t)
    if state.excluded in q.edges:
        raise CoherenceViolated("trail uses the excluded edge")
    # C1: all separators covered, endpoints at the next levels
    if not set(seg.sep_ids) <= set(q.edges):
        raise CoherenceViolated("C1: trail misses a separator edge")
    if q.vertices[0] not in state.level("A", q.n + 1):
        raise CoherenceViolated("C1: start vertex not at level n+1")
    if q.vertices[-1] not in state.level("B", q.m + 1):
        raise CoherenceViolated("C1: end vertex not at level m+1")
    # C2: every non-H edge sits in a recorded admissible bracket
    a_next = state.level("A", q.n + 1)
    b_next = state.level("B", q.m + 1)
    for slot, eid in enumerate(q.edges):
        if eid in seg.h_edges:
            continue
        if slot not in q.brackets:
            raise CoherenceViolated(f"C2: non-H edge at slot {slot} lacks a bracket")
        r, tt = q.brackets[slot]
        if not (0 <= r <= slot < tt <= q.w):
            raise CoherenceViolated(f"C2: bracket {r, tt} does not cover slot {slot}")
        if q.vertices[r] not in seg.h_vertices or q.vertices[tt] not in seg.h_vertices:
            raise CoherenceViolated("C2: bracket endpoints must lie on H")
        for i in range(r, tt):
            if q.edges[i] in seg.h_edges or q.edges[i] == state.excluded:
                raise CoherenceViolated("C2: bracket subtrail uses an H edge")
        for i in range(r + 1, tt):
            if q.vertices[i] in seg.h_vertices:
                raise CoherenceViolated("C2: bracket has an inner H-vertex")
        ends = {q.vertices[r], q.vertices[tt]}
        if len(ends & a_next) > 1 or len(ends & b_next) > 1:
            raise CoherenceViolated("C2: both bracket ends inside one level set")
    # C3: segment closures are witnessed subtrails with cross-segment
    # disjoint intervals
    for side, lvl in (("A", q.n), ("B", q.m)):
        for j in range(seg.k):
            span = seg.cl_span(j, state.level(side, lvl))
            witness = q.intervals.get((side, j))
            if span is None:
                if witness is not None:
                    raise CoherenceViolated(f"C3: stale interval for {side}, segment {j}")
                continue
            if witness is None:
                raise CoherenceViolated(f"C3: missing interval for {side}, segment {j}")
            if (witness.s_lo, witness.s_hi) != span:
                raise CoherenceViolated(f"C3: interval span mismatch on segment {j}")
            if witness.q_hi - witness.q_lo != witness.s_hi - witness.s_lo:
                raise CoherenceViolated("C3: interval length mismatch")
            path = seg.seg_paths[j]
            for off in range(witness.q_hi - witness.q_lo + 1):
                sv = (
                    path[witness.s_lo + off]
                    if witness.step == 1
                    else path[witness.s_hi - off]
                )
                if q.vertices[witness.q_lo + off] != sv:
                    raise CoherenceViolated("C3: interval does not witness the closure")
    items = list(q.intervals.items())
    for i in range(len(items)):
        for jdx in range(i + 1, len(items)):
            (s1, j1), w1 = items[i]
            (s2, j2), w2 = items[jdx]
            if j1 == j2:
                continue
            if not (w1.q_hi < w2.q_lo or w2.q_hi < w1.q_lo):
                raise CoherenceViolated(
                    f"C3: intervals for segments {j1} and {j2} overlap"
                )


def initial_coherent_trail(
    state: ReachState, seg: SegmentedCircuit, force_segment: int | None = None
) -> CoherentTrail:
    """Coherent trail along H between the first levels hitting one segment.

    Picks the segment minimizing the level sum (or the forced segment), and
    walks H from the chosen start vertex around through every separator to
    the chosen end vertex, skipping only part of that segment.
    """
    candidates = []
    js = [force_segment] if force_segment is not None else range(seg.k)
    for j in js:
        la = state.first_hit_level(seg, "A", j)
        lb = state.first_hit_level(seg, "B", j)
        if la is not None and lb is not None:
            candidates.append((la + lb, j, la, lb))
    if not candidates:
        raise NoSharedSegment("no segment is reached from both endpoints")
    _, j, la, lb = min(candidates)
    n, m = la - 1, lb - 1
    pos = seg.pos_in_seg[j]
    a_pick = min(seg.ins(j, state.level("A", n + 1)), key=pos.get)
    b_pick = min(seg.ins(j, state.level("B", m + 1)), key=pos.get)
    alpha, beta = pos[a_pick], pos[b_pick]
    vs, _ = seg.seg_bounds[j]
    big_l = len(seg.trail.edges)
    ga, gb = vs + alpha, vs + beta

    if beta < alpha:
        direction = 1
        verts = seg.trail.vertices[ga : big_l + 1] + seg.trail.vertices[1 : gb + 1]
        edges = seg.trail.edges[ga:] + seg.trail.edges[:gb]

        def qpos(gidx: int) -> int:
            return gidx - ga if gidx >= ga else (big_l - ga) + gidx

    elif beta > alpha:
        direction = -1
        verts = tuple(reversed(seg.trail.vertices[: ga + 1])) + tuple(
            reversed(seg.trail.vertices[gb:big_l])
        )
        edges = tuple(reversed(seg.trail.edges[:ga])) + tuple(
            reversed(seg.trail.edges[gb:])
        )

        def qpos(gidx: int) -> int:
            return ga - gidx if gidx <= ga else ga + (big_l - gidx)

    else:
        direction = 1
        verts = seg.trail.vertices[ga : big_l + 1] + seg.trail.vertices[1 : ga + 1]
        edges = seg.trail.edges[ga:] + seg.trail.edges[:ga]

        def qpos(gidx: int) -> int:
            return gidx - ga if gidx >= ga else (big_l - ga) + gidx

    intervals = {}
    for side, lvl in (("A", n), ("B", m)):
        for j2 in range(seg.k):
            span = seg.cl_span(j2, state.level(side, lvl))
            if span is None:
                continue
            if j2 == j:
                raise CoherenceViolated(
                    "chosen segment has a nonempty closure below its first level"
                )
            vs2, _ = seg.seg_bounds[j2]
            p1, p2 = qpos(vs2 + span[0]), qpos(vs2 + span[1])
            intervals[(side, j2)] = SpanWitness(
                min(p1, p2), max(p1, p2), span[0], span[1], direction
            )
    q = CoherentTrail(
        vertices=tuple(verts),
        edges=tuple(edges),
        n=n,
        m=m,
        intervals=intervals,
        brackets={},
    )
    check_coherent(q, state, seg)
    return q


# ---------------------------------------------------------------------------
# descent transformations


def _subspan(old: SpanWitness, s_lo: int, s_hi: int) -> SpanWitness:
    """Witness for a sub-range of segment positions inside an old witness."""
    if not (old.s_lo <= s_lo and s_hi <= old.s_hi):
        raise CoherenceViolated("projected span escapes the recorded interval")
    if old.step == 1:
        q_lo = old.q_lo + (s_lo - old.s_lo)
        q_hi = old.q_lo + (s_hi - old.s_lo)
    else:
        q_lo = old.q_lo + (old.s_hi - s_hi)
        q_hi = old.q_lo + (old.s_hi - s_lo)
    return SpanWitness(q_lo, q_hi, s_lo, s_hi, old.step)


def _demote(q: CoherentTrail, state: ReachState, seg: SegmentedCircuit, side: str) -> CoherentTrail:
    """Drop one level on the given side; intervals shrink in place."""
    n, m = q.n, q.m
    new_lvl = (n - 1) if side == "A" else (m - 1)
    intervals = dict(q.intervals)
    for j in range(seg.k):
        span = seg.cl_span(j, state.level(side, new_lvl))
        old = intervals.pop((side, j), None)
        if span is None:
            continue
        if old is None:
            raise CoherenceViolated("closure nonempty but no recorded interval")
        intervals[(side, j)] = _subspan(old, *span)
    out = replace(
        q,
        n=new_lvl if side == "A" else n,
        m=new_lvl if side == "B" else m,
        intervals=intervals,
    )
    check_coherent(out, state, seg)
    return out


def _mirror(q: CoherentTrail) -> CoherentTrail:
    """Reverse the trail and swap the roles of the two sides."""
    w = q.w
    intervals = {
        ("A" if side == "B" else "B", j): SpanWitness(
            w - wit.q_hi, w - wit.q_lo, wit.s_lo, wit.s_hi, -wit.step
        )
        for (side, j), wit in q.intervals.items()
    }
    brackets = {
        w - 1 - slot: (w - t, w - r) for slot, (r, t) in q.brackets.items()
    }
    return CoherentTrail(
        vertices=tuple(reversed(q.vertices)),
        edges=tuple(reversed(q.edges)),
        n=q.m,
        m=q.n,
        intervals=intervals,
        brackets=brackets,
    )


class _Restart(Exception):
    """Internal: descent should rebuild from the named segment."""

    def __init__(self, segment_index: int):
        self.segment_index = segment_index


def _reroute_a_side(
    q: CoherentTrail, state: ReachState, seg: SegmentedCircuit
) -> CoherentTrail:
    """One rerouting step on the A side (n >= 1, start vertex fresh at n+1).

    Splices the witness trail of the start vertex into the trail, replacing
    the stretch of segment j between the frontier anchor and the witness
    source; the A level strictly drops.
    """
    n, m = q.n, q.m
    start = q.vertices[0]
    if start in state.level("A", n):
        raise CoherenceViolated("reroute called although demotion applies")
    p = state.witness("A", start)
    x = p.vertices[0]
    if p.vertices[-1] != start:
        raise CoherenceViolated("witness trail does not end at the start vertex")
    j_candidates = [
        j for j in range(seg.k)
        if x in seg.cl_vertices(j, state.level("A", n))
    ]
    if not j_candidates:
        raise CoherenceViolated("witness source lies outside the level closure")
    j = j_candidates[0]
    wit = q.intervals[("A", j)]
    px = seg.pos_in_seg[j][x]
    d = wit.q_lo + (px - wit.s_lo) if wit.step == 1 else wit.q_lo + (wit.s_hi - px)
    if q.vertices[d] != x:
        raise CoherenceViolated("interval arithmetic lost the witness source")
    frontier_union = set()
    for i in range(1, n + 1):
        frontier_union |= seg.frontier(j, state.level("A", i))
    c = next((r for r in range(d, -1, -1) if q.vertices[r] in frontier_union), None)
    if c is None:
        raise CoherenceViolated("no frontier anchor before the witness source")
    n_prime = next(
        (
            i
            for i in range(n + 1)
            if q.vertices[c] in seg.frontier(j, state.level("A", i + 1))
        ),
        None,
    )
    if n_prime is None or n_prime >= n:
        raise DescentStalled(f"anchor level {n_prime} does not drop below {n}")
    b_wit = q.intervals.get(("B", j))
    overlaps_b = b_wit is not None and not (b_wit.q_hi < c or b_wit.q_lo > d)
    if overlaps_b or x in state.level("B", m + 1):
        raise _Restart(j)
    if set(p.edges) & set(q.edges):
        raise CoherenceViolated("witness trail shares an edge with the trail")

    len_p = len(p.edges)

    def remap(pos: int) -> int:
        if pos <= c:
            return c - pos
        if pos >= d:
            return c + len_p + (pos - d)
        raise CoherenceViolated("position inside the removed stretch survived")

    verts = (
        tuple(reversed(q.vertices[: c + 1]))
        + tuple(reversed(p.vertices))[1:]
        + q.vertices[d + 1 :]
    )
    edges = (
        tuple(reversed(q.edges[:c]))
        + tuple(reversed(p.edges))
        + q.edges[d:]
    )
    intervals = {}
    for j2 in range(seg.k):
        span = seg.cl_span(j2, state.level("A", n_prime))
        if span is not None:
            old = q.intervals.get(("A", j2))
            if old is None:
                raise CoherenceViolated("closure nonempty but no recorded interval")
            sub = _subspan(old, *span)
            intervals[("A", j2)] = _remap_witness(sub, remap)
        b_old = q.intervals.get(("B", j2))
        if b_old is not None:
            intervals[("B", j2)] = _remap_witness(b_old, remap)
    brackets = {}
    for slot, (r, t) in q.brackets.items():
        if slot <= c - 1:
            brackets[c - 1 - slot] = (c - t, c - r)
        elif slot >= d:
            brackets[c + len_p + (slot - d)] = (remap(r), remap(t))
        else:
            raise CoherenceViolated("bracket inside the removed stretch")
    for i in range(len_p):
        brackets[c + i] = (c, c + len_p)
    out = CoherentTrail(
        vertices=verts,
        edges=edges,
        n=n_prime,
        m=m,
        intervals=intervals,
        brackets=brackets,
    )
    check_coherent(out, state, seg)
    return out


def _remap_witness(wit: SpanWitness, remap) -> SpanWitness:
    p1, p2 = remap(wit.q_lo), remap(wit.q_hi)
    step = wit.step if p2 > p1 or (p1 == p2) else -wit.step
    if p2 < p1:
        p1, p2 = p2, p1
    return SpanWitness(p1, p2, wit.s_lo, wit.s_hi, step)


def reroute_descent(
    q: CoherentTrail, state: ReachState, seg: SegmentedCircuit
) -> CoherentTrail:
    """Bring a coherent trail down to level (0, 0).

    Each iteration either demotes an endpoint one level, splices a witness
    trail (strictly dropping one level), or restarts from a segment now
    known to be shared at smaller levels; the level sum strictly decreases.
    """
    check_coherent(q, state, seg)
    guard = q.n + q.m + 1
    while (q.n, q.m) != (0, 0):
        guard -= 1
        if guard < 0:
            raise DescentStalled("level sum failed to reach zero in budget")
        before = q.n + q.m
        if q.n >= 1 and q.vertices[0] in state.level("A", q.n):
            q = _demote(q, state, seg, "A")
        elif q.m >= 1 and q.vertices[-1] in state.level("B", q.m):
            q = _demote(q, state, seg, "B")
        elif q.n >= 1:
            try:
                q = _reroute_a_side(q, state, seg)
            except _Restart as r:
                q = initial_coherent_trail(state, seg, force_segment=r.segment_index)
        else:
            try:
                q = _mirror(_reroute_a_side(_mirror(q), state.swapped(), seg))
                check_coherent(q, state, seg)
            except _Restart as r:
                q = initial_coherent_trail(state, seg, force_segment=r.segment_index)
        if q.n + q.m >= before:
            raise DescentStalled(
                f"level sum did not decrease: {before} -> {q.n + q.m}"
            )
    return q


def bridge_case(
    g: Graph, h: Trail, s_prefix: Iterable[int], e_next: int
) -> Trail | CutCertificate:
    """Extend circuit h by the edge e_next, a bridge of G-E(h).

    Returns the extended circuit, or the odd-cut certificate produced when
    the reach fixpoint shares no segment.  If an endpoint of e_next is off
    the circuit, the result passes it exactly once.
    """
    s_set = frozenset(s_prefix)
    seg = segment(g, h, s_set)
    a, b = g.endpoints(e_next)
    outcome = hopping_fixpoint(g, seg, e_next, a, b)
    if isinstance(outcome, CutCertificate):
        return outcome
    state = outcome
    q = reroute_descent(initial_coherent_trail(state, seg), state, seg)
    a1 = q.vertices[0]
    b1 = q.vertices[-1]
    p_a = state.witness("A", a1)
    p_b = state.witness("B", b1)
    if p_a.vertices[0] != a or p_b.vertices[0] != b:
        raise CoherenceViolated("entry witnesses do not start at the edge endpoints")
    if set(p_a.vertices) & set(p_b.vertices):
        raise CoherenceViolated("entry witnesses are not vertex-disjoint")
    if (set(p_a.edges) | set(p_b.edges)) & set(q.edges):
        raise CoherenceViolated("entry witness shares an edge with the trail")
    circuit = trail_concat(
        Trail((b, a), (e_next,)), p_a, q.trail(), p_b.reverse()
    )
    validate_trail(g, circuit)
    assert circuit.is_closed
    return circuit
