"""Immutable simple graphs, trails, and the elementary subroutines.

Vertices are 0..n-1; edges carry stable integer ids given by their position
in the edge list.  Trails record both vertices and edge ids so that
distinct-edge checking stays exact when vertices repeat.  All operations are
pure functions over immutable inputs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import BadEdgeId, CutTooSmall, NotConnected, NotEven

EdgeIds = frozenset  # edge sets are frozensets of edge ids


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph with indexed edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for eid, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"edge {eid} is a self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {eid}=({u},{v}) has endpoint out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"edge {eid}=({u},{v}) duplicates an earlier edge")
            seen.add(key)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in pairs))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex list of (neighbor, edge id), ordered by edge id."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def endpoints(self, eid: int) -> tuple[int, int]:
        if not (0 <= eid < self.m):
            raise BadEdgeId(f"edge id {eid} out of range (m={self.m})")
        return self.edges[eid]

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {eid}")

    def all_edges(self) -> EdgeIds:
        return frozenset(range(self.m))


@dataclass(frozen=True)
class Trail:
    """Walk with pairwise-distinct edges; vertices[i]--vertices[i+1] = edges[i].

    A trivial trail is a single vertex with no edges; it counts as closed.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("trail needs exactly one more vertex than edges")

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.start == self.end

    def edge_set(self) -> EdgeIds:
        return frozenset(self.edges)

    def reverse(self) -> "Trail":
        return Trail(tuple(reversed(self.vertices)), tuple(reversed(self.edges)))

    def __len__(self) -> int:
        return len(self.edges)


def validate_trail(g: Graph, t: Trail) -> None:
    """Raise ValueError unless t is a genuine trail of g."""
    if len(set(t.edges)) != len(t.edges):
        raise ValueError("trail repeats an edge")
    for i, eid in enumerate(t.edges):
        u, v = g.endpoints(eid)
        if {t.vertices[i], t.vertices[i + 1]} != {u, v}:
            raise ValueError(f"step {i} does not follow edge {eid}")
    for v in t.vertices:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")


def trail_concat(*parts: Trail) -> Trail:
    """Concatenate trails end-to-start; the pieces must be edge-disjoint."""
    verts = list(parts[0].vertices)
    edges = list(parts[0].edges)
    for p in parts[1:]:
        if p.start != verts[-1]:
            raise ValueError("trail concatenation endpoints do not match")
        verts.extend(p.vertices[1:])
        edges.extend(p.edges)
    if len(set(edges)) != len(edges):
        raise ValueError("trail concatenation repeats an edge")
    return Trail(tuple(verts), tuple(edges))


# ---------------------------------------------------------------------------
# boundaries, parity, components


def edge_boundary(g: Graph, side: Iterable[int]) -> EdgeIds:
    """Edges with exactly one endpoint in `side`."""
    a = set(side)
    for v in a:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    return frozenset(
        eid for eid, (u, v) in enumerate(g.edges) if (u in a) != (v in a)
    )


def is_even_subgraph(g: Graph, f: Iterable[int]) -> bool:
    """True iff every vertex has even degree in the edge set f."""
    deg = [0] * g.n
    for eid in f:
        u, v = g.endpoints(eid)
        deg[u] += 1
        deg[v] += 1
    return all(d % 2 == 0 for d in deg)


def connected_components(
    g: Graph, restricted_to: Iterable[int] | None = None
) -> list[frozenset]:
    """Components as vertex sets, ordered by smallest member.

    With `restricted_to`, only edges in that set are used and vertices
    isolated in the restriction are excluded.
    """
    if restricted_to is None:
        allowed = None
        vertices = range(g.n)
    else:
        allowed = frozenset(restricted_to)
        touched = set()
        for eid in allowed:
            u, v = g.endpoints(eid)
            touched.add(u)
            touched.add(v)
        vertices = sorted(touched)
    seen: set[int] = set()
    out = []
    for v0 in vertices:
        if v0 in seen:
            continue
        comp = _bfs_component(g, v0, allowed)
        seen |= comp
        out.append(frozenset(comp))
    return out


def vertex_components_avoiding(g: Graph, banned_edges: Iterable[int]) -> list[frozenset]:
    """Components of (V, E minus banned); isolated vertices are singletons."""
    banned = frozenset(banned_edges)
    seen: set[int] = set()
    out = []
    for v0 in range(g.n):
        if v0 in seen:
            continue
        comp = _bfs_component(g, v0, None, banned)
        seen |= comp
        out.append(frozenset(comp))
    return out


def _bfs_component(
    g: Graph,
    v0: int,
    allowed: frozenset | None,
    banned: frozenset = frozenset(),
) -> set:
    comp = {v0}
    queue = deque([v0])
    while queue:
        v = queue.popleft()
        for w, eid in g.adjacency[v]:
            if eid in banned or (allowed is not None and eid not in allowed):
                continue
            if w not in comp:
                comp.add(w)
                queue.append(w)
    return comp


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_bfs_component(g, 0, None)) == g.n


# ---------------------------------------------------------------------------
# bridges and 2-edge-connected components


class TwoEdgeConnectedComponent(NamedTuple):
    vertices: frozenset
    edges: frozenset


def bridges_and_2ec_components(
    g: Graph, f: Iterable[int]
) -> tuple[EdgeIds, list[TwoEdgeConnectedComponent]]:
    """Classify every edge of f as a bridge or as part of exactly one maximal
    2-edge-connected subgraph of (V, f)."""
    allowed = frozenset(f)
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # iterative lowlink DFS; entries are (vertex, incoming edge id, adj index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, in_eid, idx = stack.pop()
            adj = g.adjacency[v]
            advanced = False
            while idx < len(adj):
                w, eid = adj[idx]
                idx += 1
                if eid not in allowed or eid == in_eid:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((v, in_eid, idx))
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            # v is finished; propagate lowlink to its parent
            if in_eid != -1 and stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] > disc[pv]:
                    bridges.add(in_eid)
    non_bridge = allowed - bridges
    comps = []
    for verts in connected_components(g, non_bridge):
        edges = frozenset(
            eid for eid in non_bridge
            if g.edges[eid][0] in verts and g.edges[eid][1] in verts
        )
        comps.append(TwoEdgeConnectedComponent(verts, edges))
    return frozenset(bridges), comps


# ---------------------------------------------------------------------------
# unit-capacity flow (augmenting paths) and edge-disjoint paths


class FlowNetwork:
    """Residual network over undirected edges; arcs stored in pairs."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.res: list[int] = []
        self.tag: list = []

    def add_undirected(self, u: int, v: int, cap: int, tag=None) -> None:
        for a, b in ((u, v), (v, u)):
            self.head[a].append(len(self.to))
            self.to.append(b)
            self.cap.append(cap)
            self.res.append(cap)
            self.tag.append(tag)

    def add_directed(self, u: int, v: int, cap: int, tag=None) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.res.append(cap)
        self.tag.append(tag)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.res.append(0)
        self.tag.append(tag)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        value = 0
        while limit is None or value < limit:
            parent_arc = [-1] * self.n
            parent_arc[s] = -2
            queue = deque([s])
            while queue and parent_arc[t] == -1:
                v = queue.popleft()
                for a in self.head[v]:
                    w = self.to[a]
                    if self.res[a] > 0 and parent_arc[w] == -1:
                        parent_arc[w] = a
                        queue.append(w)
            if parent_arc[t] == -1:
                break
            # bottleneck along the BFS path
            bottleneck = None
            v = t
            while v != s:
                a = parent_arc[v]
                bottleneck = self.res[a] if bottleneck is None else min(bottleneck, self.res[a])
                v = self.to[a ^ 1]
            v = t
            while v != s:
                a = parent_arc[v]
                self.res[a] -= bottleneck
                self.res[a ^ 1] += bottleneck
                v = self.to[a ^ 1]
            value += bottleneck
        return value

    def source_side(self, s: int) -> frozenset:
        """Vertices reachable from s in the residual network."""
        seen = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for a in self.head[v]:
                w = self.to[a]
                if self.res[a] > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)


def two_edge_disjoint_paths(g: Graph, s: int, t: int) -> tuple[Trail, Trail]:
    """Two edge-disjoint s-t paths via unit-capacity max flow.

    Raises CutTooSmall with a witness edge set of size <= 1 when they do
    not exist.
    """
    if s == t:
        raise ValueError("endpoints must differ")
    net = FlowNetwork(g.n)
    for eid, (u, v) in enumerate(g.edges):
        net.add_undirected(u, v, 1, tag=eid)
    value = net.max_flow(s, t, limit=2)
    if value < 2:
        side = net.source_side(s)
        witness = frozenset(
            eid for eid, (u, v) in enumerate(g.edges) if (u in side) != (v in side)
        )
        raise CutTooSmall(witness)
    walks = _decompose_unit_flow(g, net, s, t, 2)
    return walks[0], walks[1]


def _decompose_unit_flow(g: Graph, net: FlowNetwork, s: int, t: int, count: int) -> list[Trail]:
    # orientation of each saturated undirected edge, smallest edge id first
    succ: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid in range(g.m):
        a = 2 * eid  # forward arc of edge eid
        if net.res[a] < net.cap[a] and net.res[a ^ 1] > net.cap[a ^ 1]:
            u, v = g.edges[eid]
            succ[u].append((eid, v))
        elif net.res[a ^ 1] < net.cap[a ^ 1] and net.res[a] > net.cap[a]:
            u, v = g.edges[eid]
            succ[v].append((eid, u))
    for lst in succ:
        lst.sort()
    out = []
    for _ in range(count):
        verts = [s]
        edges = []
        v = s
        while v != t:
            eid, w = succ[v].pop(0)
            edges.append(eid)
            verts.append(w)
            v = w
        out.append(_shortcut_to_path(verts, edges))
    return out


def _shortcut_to_path(verts: list[int], edges: list[int]) -> Trail:
    """Drop closed detours so the walk becomes a simple path."""
    pos: dict[int, int] = {}
    out_v: list[int] = []
    out_e: list[int] = []
    for i, v in enumerate(verts):
        if v in pos:
            k = pos[v]
            for dropped in out_v[k + 1:]:
                del pos[dropped]
            del out_v[k + 1:]
            del out_e[k:]
        else:
            pos[v] = len(out_v)
            out_v.append(v)
            if i > 0:
                out_e.append(edges[i - 1])
    return Trail(tuple(out_v), tuple(out_e))


# ---------------------------------------------------------------------------
# Euler circuits


def euler_circuit(g: Graph, f: Iterable[int], start: int | None = None) -> Trail:
    """Closed trail using every edge of f exactly once (Hierholzer)."""
    allowed = frozenset(f)
    if not allowed:
        return Trail((start if start is not None else 0,), ())
    deg = [0] * g.n
    for eid in allowed:
        u, v = g.endpoints(eid)
        deg[u] += 1
        deg[v] += 1
    if any(d % 2 for d in deg):
        raise NotEven("some vertex has odd degree in the edge set")
    if len(connected_components(g, allowed)) != 1:
        raise NotConnected("edge set is not connected")
    if start is None:
        start = min(v for v in range(g.n) if deg[v] > 0)
    elif deg[start] == 0:
        raise NotConnected(f"start vertex {start} is isolated in the edge set")
    adj = [[(w, eid) for w, eid in g.adjacency[v] if eid in allowed] for v in range(g.n)]
    ptr = [0] * g.n
    used = set()
    stack: list[tuple[int, int]] = [(start, -1)]
    out_v: list[int] = []
    out_e: list[int] = []
    while stack:
        v, e_in = stack[-1]
        lst = adj[v]
        i = ptr[v]
        while i < len(lst) and lst[i][1] in used:
            i += 1
        ptr[v] = i
        if i < len(lst):
            w, eid = lst[i]
            used.add(eid)
            stack.append((w, eid))
        else:
            stack.pop()
            out_v.append(v)
            if e_in != -1:
                out_e.append(e_in)
    out_v.reverse()
    out_e.reverse()
    return Trail(tuple(out_v), tuple(out_e))


# ---------------------------------------------------------------------------
# contraction


@dataclass(frozen=True)
class Contraction:
    """Result of contracting a connected vertex set W to one vertex.

    Parallel edges created by the contraction are merged; each surviving edge
    records the full class of original edges it stands for (representative
    first) so cuts and trails can be lifted back.
    """

    graph: Graph
    vertex_map: tuple[int, ...]  # old vertex -> new vertex
    contracted_vertex: int
    edge_classes: tuple[tuple[int, ...], ...]  # new edge id -> original ids

    def representative(self, new_eid: int) -> int:
        return self.edge_classes[new_eid][0]

    def lift_side(self, new_side: Iterable[int]) -> frozenset:
        """Preimage of a vertex side of the contracted graph."""
        side = set(new_side)
        return frozenset(
            v for v in range(len(self.vertex_map)) if self.vertex_map[v] in side
        )


def contract_subgraph(g: Graph, w: Iterable[int]) -> Contraction:
    """Contract the connected vertex set w into a single vertex.

    The contracted vertex takes the index rank of min(w); other vertices keep
    their relative order, so contracting a singleton is the identity.
    """
    wset = frozenset(w)
    if not wset:
        raise BadParam("cannot contract an empty vertex set")
    for v in wset:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    inside = frozenset(
        eid for eid, (u, v) in enumerate(g.edges) if u in wset and v in wset
    )
    if len(wset) > 1:
        comp = _bfs_component(g, min(wset), inside)
        if comp != wset:
            raise NotConnected("vertex set to contract is not connected")
    anchor = min(wset)
    kept = sorted((set(range(g.n)) - wset) | {anchor})
    new_id = {v: i for i, v in enumerate(kept)}
    vmap = tuple(new_id[v] if v not in wset else new_id[anchor] for v in range(g.n))
    vd = new_id[anchor]
    pair_to_new: dict[tuple[int, int], int] = {}
    new_edges: list[tuple[int, int]] = []
    classes: list[list[int]] = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in inside:
            continue
        a, b = vmap[u], vmap[v]
        key = (a, b) if a < b else (b, a)
        if key in pair_to_new:
            classes[pair_to_new[key]].append(eid)
        else:
            pair_to_new[key] = len(new_edges)
            new_edges.append((a, b))
            classes.append([eid])
    return Contraction(
        graph=Graph(len(kept), tuple(new_edges)),
        vertex_map=vmap,
        contracted_vertex=vd,
        edge_classes=tuple(tuple(c) for c in classes),
    )


def subdivide_edge(g: Graph, eid: int) -> tuple[Graph, int, tuple[int, int]]:
    """Replace edge eid=(u,v) by u-w and w-v through a new vertex w=n.

    Returns (new graph, w, (id of u-w half, id of w-v half)); the u-w half
    reuses eid and the w-v half is appended.
    """
    u, v = g.endpoints(eid)
    w = g.n
    edges = list(g.edges)
    edges[eid] = (u, w)
    edges.append((w, v))
    return Graph(g.n + 1, tuple(edges)), w, (eid, len(edges) - 1)


# ---------------------------------------------------------------------------
# circuit verification


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_circuit(g: Graph, t: Trail, s: Iterable[int]) -> VerifyResult:
    """Check that t is a closed trail of g covering every edge of s."""
    want = frozenset(s)
    if len(set(t.edges)) != len(t.edges):
        return VerifyResult(False, "duplicate edge in walk")
    for i, eid in enumerate(t.edges):
        if not (0 <= eid < g.m):
            return VerifyResult(False, f"edge id {eid} out of range")
        u, v = g.edges[eid]
        if {t.vertices[i], t.vertices[i + 1]} != {u, v}:
            return VerifyResult(False, f"step {i} does not follow edge {eid}")
    if not t.is_closed:
        return VerifyResult(False, "walk is not closed")
    missing = want - set(t.edges)
    if missing:
        return VerifyResult(False, f"prescribed edges not covered: {sorted(missing)}")
    return VerifyResult(True)
