"""Odd-cut detection: Gomory-Hu tree, parity scan, and brute-force oracle.

An odd cut is an edge boundary of odd cardinality.  The boundary of A is odd
exactly when A contains an odd number of odd-degree vertices, so minimum odd
cuts reduce to minimum T-cuts for T = odd-degree vertices, and those are
attained among the fundamental cuts of a Gomory-Hu tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DisconnectedInput, TooLarge
from .graphs import FlowNetwork, Graph, edge_boundary, is_connected


@dataclass(frozen=True)
class CutCertificate:
    """A vertex side together with its recomputed edge boundary."""

    side: frozenset
    boundary: frozenset

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def odd(self) -> bool:
        return self.size % 2 == 1

    def is_valid_for(self, g: Graph) -> bool:
        return (
            0 < len(self.side) < g.n
            and edge_boundary(g, self.side) == self.boundary
        )

    def to_json(self) -> dict:
        return {
            "side": sorted(self.side),
            "boundary": sorted(self.boundary),
            "size": self.size,
            "odd": self.odd,
        }


def certify(g: Graph, side: Iterable[int]) -> CutCertificate:
    s = frozenset(side)
    return CutCertificate(s, edge_boundary(g, s))


@dataclass(frozen=True)
class GomoryHuTree:
    """All-pairs min cuts of a connected graph, as a parent array.

    parent[root] == -1; capacity[v] is the min cut value between v and
    parent[v], and the fundamental partition under each tree edge is an
    actual minimum cut between its endpoints.
    """

    parent: tuple[int, ...]
    capacity: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.parent.index(-1)

    def min_cut_value(self, s: int, t: int) -> int:
        depth = self._depths()
        best = None
        a, b = s, t
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            best = self.capacity[a] if best is None else min(best, self.capacity[a])
            a = self.parent[a]
        return best

    def _depths(self) -> list[int]:
        n = len(self.parent)
        depth = [-1] * n
        depth[self.root] = 0
        for v in range(n):
            path = []
            u = v
            while depth[u] == -1:
                path.append(u)
                u = self.parent[u]
            d = depth[u]
            for u in reversed(path):
                d += 1
                depth[u] = d
        return depth

    def subtree(self, v: int) -> frozenset:
        """Vertices on v's side of the tree edge (v, parent[v])."""
        n = len(self.parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for u in range(n):
            if self.parent[u] != -1:
                children[self.parent[u]].append(u)
        out = set()
        stack = [v]
        while stack:
            u = stack.pop()
            out.add(u)
            stack.extend(children[u])
        return frozenset(out)


def _min_cut_between(g: Graph, vertex_groups: list[list[int]], s_group: int, t_group: int):
    """Min cut between two groups after contracting each group to a point."""
    net = FlowNetwork(len(vertex_groups))
    gid = {}
    for i, grp in enumerate(vertex_groups):
        for v in grp:
            gid[v] = i
    caps: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        a, b = gid[u], gid[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        caps[key] = caps.get(key, 0) + 1
    for (a, b), c in sorted(caps.items()):
        net.add_undirected(a, b, c)
    value = net.max_flow(s_group, t_group)
    return value, net.source_side(s_group)


def gomory_hu_tree(g: Graph) -> GomoryHuTree:
    """Contraction-based Gomory-Hu construction (unit edge capacities)."""
    if not is_connected(g):
        raise DisconnectedInput("Gomory-Hu tree requires a connected graph")
    if g.n == 1:
        return GomoryHuTree((-1,), (0,))
    nodes: list[list[int]] = [sorted(range(g.n))]
    tree: list[dict[int, int]] = [dict()]  # node id -> {neighbor id: capacity}
    pending = [0]
    while pending:
        i = pending.pop(0)
        if len(nodes[i]) < 2:
            continue
        s, t = nodes[i][0], nodes[i][1]
        # contract every subtree hanging off node i into one auxiliary group
        comp_of: dict[int, int] = {}
        groups: list[list[int]] = [[v] for v in nodes[i]]
        own = {v: k for k, v in enumerate(nodes[i])}
        for nb in tree[i]:
            if nb in comp_of:
                continue
            stack = [nb]
            members = []
            seen = {i, nb}
            while stack:
                x = stack.pop()
                members.append(x)
                for y in tree[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            gidx = len(groups)
            groups.append(sorted(v for x in members for v in nodes[x]))
            for x in members:
                comp_of[x] = gidx
        value, side = _min_cut_between(g, groups, own[s], own[t])
        s_part = sorted(v for v in nodes[i] if own[v] in side)
        t_part = sorted(v for v in nodes[i] if own[v] not in side)
        j = len(nodes)
        nodes[i] = s_part
        nodes.append(t_part)
        tree.append({i: value})
        old = tree[i]
        tree[i] = {j: value}
        for nb, cap in old.items():
            if comp_of[nb] in side:
                tree[i][nb] = cap
                tree[nb][i] = cap
            else:
                tree[j][nb] = cap
                del tree[nb][i]
                tree[nb][j] = cap
        pending.extend([i, j])
    vertex_of_node = {k: nodes[k][0] for k in range(len(nodes))}
    parent = [-1] * g.n
    capacity = [0] * g.n
    root = vertex_of_node[0]
    seen = {0}
    stack = [0]
    while stack:
        k = stack.pop()
        for nb, cap in tree[k].items():
            if nb in seen:
                continue
            seen.add(nb)
            parent[vertex_of_node[nb]] = vertex_of_node[k]
            capacity[vertex_of_node[nb]] = cap
            stack.append(nb)
    assert parent[root] == -1
    return GomoryHuTree(tuple(parent), tuple(capacity))


def _odd_degree_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if g.degree(v) % 2 == 1)


def _normalized_side(g: Graph, side: frozenset) -> frozenset:
    """Report the side not containing vertex 0 (both sides bound the same cut)."""
    if 0 in side:
        return frozenset(range(g.n)) - side
    return side


def min_odd_cut(g: Graph) -> CutCertificate | None:
    """A minimum-cardinality odd cut, or None when all vertex degrees are even.

    Scans the fundamental cuts of a Gomory-Hu tree for sides containing an
    odd number of odd-degree vertices; the minimum T-cut is attained there.
    """
    if not is_connected(g):
        raise DisconnectedInput("min_odd_cut requires a connected graph")
    t_set = _odd_degree_vertices(g)
    if not t_set:
        return None
    tree = gomory_hu_tree(g)
    best: tuple[int, tuple, frozenset] | None = None
    for v in range(g.n):
        if tree.parent[v] == -1:
            continue
        side = tree.subtree(v)
        if len(side & t_set) % 2 == 0:
            continue
        norm = _normalized_side(g, side)
        key = (tree.capacity[v], tuple(sorted(norm)))
        if best is None or key < best[:2]:
            best = (*key, norm)
    assert best is not None, "T nonempty implies some fundamental cut is T-odd"
    cert = certify(g, best[2])
    assert cert.size == best[0] and cert.odd, "Gomory-Hu cut property violated"
    return cert


def brute_force_min_odd_cut(g: Graph) -> CutCertificate | None:
    """Exact minimum odd cut by enumerating all bipartitions (n <= 24)."""
    if g.n > 24:
        raise TooLarge(f"brute force guard: n={g.n} > 24")
    if not is_connected(g):
        raise DisconnectedInput("brute_force_min_odd_cut requires a connected graph")
    if not _odd_degree_vertices(g):
        return None
    masks = [(1 << u, 1 << v) for u, v in g.edges]
    best: tuple[int, tuple, int] | None = None
    # sides range over subsets of {1..n-1}: each bipartition once, 0 outside
    for bits in range(1, 1 << (g.n - 1)):
        a = bits << 1
        size = 0
        for mu, mv in masks:
            if bool(a & mu) != bool(a & mv):
                size += 1
        if size % 2 == 0:
            continue
        side = tuple(v for v in range(1, g.n) if a >> v & 1)
        key = (size, side)
        if best is None or key < best[:2]:
            best = (size, side, a)
    assert best is not None
    return certify(g, best[1])


def has_odd_cut_leq(g: Graph, k: int) -> CutCertificate | None:
    """An odd cut of size at most k, or None."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    cert = min_odd_cut(g)
    if cert is not None and cert.size <= k:
        return cert
    return None


def odd_cut_within(g: Graph, s: Iterable[int]) -> CutCertificate | None:
    """An odd cut of g lying inside the edge set s, or None.

    Components of G-S have all their outgoing edges in S; such a component
    bounds an odd cut exactly when it contains an odd number of vertices of
    odd degree in (V, S).
    """
    from .graphs import vertex_components_avoiding

    s_set = frozenset(s)
    t_deg = [0] * g.n
    for eid in s_set:
        u, v = g.endpoints(eid)
        t_deg[u] += 1
        t_deg[v] += 1
    for comp in vertex_components_avoiding(g, s_set):
        if sum(t_deg[v] % 2 for v in comp) % 2 == 1:
            cert = certify(g, comp)
            assert cert.boundary <= s_set and cert.odd
            return cert
    return None


def edge_connectivity(g: Graph) -> int:
    """Global edge connectivity via n-1 max-flow computations."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    best = None
    for v in range(1, g.n):
        net = FlowNetwork(g.n)
        for u, w in g.edges:
            net.add_undirected(u, w, 1)
        val = net.max_flow(0, v, limit=best)
        if best is None or val < best:
            best = val
    return best
