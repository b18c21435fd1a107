"""Build a circuit through prescribed edges, or certify an odd cut.

The construction is inductive: start from a circuit through the first edge
and fold the remaining edges in one at a time.  An edge already on the
circuit is free; an edge in a 2-edge-connected component of the leftover
graph splices in via two edge-disjoint paths; an edge that is a bridge of
the leftover graph goes through the rerouting machinery, which either
succeeds or emits an odd cut of size at most the number of edges placed so
far.  Certificates therefore always have odd size at most |S|.
"""
from __future__ import annotations

from typing import Iterable

from .cuts import CutCertificate, certify
from .errors import CoherenceViolated, CutTooSmall, DisconnectedInput, EmptyPrescribed
from .graphs import (
    FlowNetwork,
    Graph,
    Trail,
    _bfs_component,
    bridges_and_2ec_components,
    contract_subgraph,
    edge_boundary,
    euler_circuit,
    is_connected,
    subdivide_edge,
    trail_concat,
    two_edge_disjoint_paths,
    validate_trail,
)
from .hopping import bridge_case
from .segments import normalize_circuit


def _contract_subdivision(walk: Trail, w: int, halves: tuple[int, int], eid: int) -> Trail:
    """Map a walk of the subdivided graph back, fusing the halves into eid."""
    half_set = set(halves)
    verts = []
    edges = []
    for i, e in enumerate(walk.edges):
        if walk.vertices[i] != w:
            verts.append(walk.vertices[i])
        if e in half_set:
            if walk.vertices[i + 1] == w:
                edges.append(eid)  # emit once, on entering the subdivider
        else:
            edges.append(e)
    verts.append(walk.vertices[-1])
    return Trail(tuple(verts), tuple(edges))


def _base_circuit(g: Graph, eid: int) -> Trail | CutCertificate:
    """Circuit through a single edge, or the bridge certificate.

    Subdivides the edge and asks for two edge-disjoint paths from the new
    vertex; failure means the edge is a bridge, an odd cut of size one.
    """
    u, v = g.endpoints(eid)
    g2, w, halves = subdivide_edge(g, eid)
    try:
        p1, p2 = two_edge_disjoint_paths(g2, w, u)
    except CutTooSmall:
        side = _bfs_component(g, v, None, banned=frozenset({eid}))
        cert = certify(g, side)
        assert cert.boundary == frozenset({eid})
        return cert
    walk = trail_concat(p1.reverse(), p2)  # u .. w .. u through both halves
    circuit = _contract_subdivision(walk, w, halves, eid)
    validate_trail(g, circuit)
    assert circuit.is_closed and eid in circuit.edges
    return circuit


def _trail_through_edge(g: Graph, eid: int, s: int, t: int) -> Trail:
    """s-t trail through edge eid inside a 2-edge-connected graph g.

    Subdivides eid and routes two edge-disjoint paths from the subdivision
    vertex, one to s and one to t (a closed trail through eid when s == t).
    """
    g2, w, halves = subdivide_edge(g, eid)
    if s == t:
        p1, p2 = two_edge_disjoint_paths(g2, w, s)
    else:
        # unit sink arcs force one path to each target
        net = FlowNetwork(g2.n + 1)
        sink = g2.n
        for e2, (x, y) in enumerate(g2.edges):
            net.add_undirected(x, y, 1, tag=e2)
        net.add_directed(s, sink, 1)
        net.add_directed(t, sink, 1)
        value = net.max_flow(w, sink)
        assert value == 2, "2-edge-connected graph must route to both targets"
        p1, p2 = _two_walks_to_sink(g2, net, w, sink)
    walk = trail_concat(p1.reverse(), p2)  # one target .. w .. other target
    if walk.vertices[0] != s:
        walk = walk.reverse()
    out = _contract_subdivision(walk, w, halves, eid)
    validate_trail(g, out)
    assert out.start == s and out.end == t and eid in out.edges
    return out


def _two_walks_to_sink(g2: Graph, net: FlowNetwork, w: int, sink: int):
    """Decompose a 2-unit flow from w into two sink-terminating walks."""
    succ: list[list[tuple[int, int]]] = [[] for _ in range(g2.n + 1)]
    for arc in range(0, len(net.to), 2):
        tag = net.tag[arc]
        if tag is None:  # directed sink arc
            if net.res[arc] < net.cap[arc]:
                succ[net.to[arc ^ 1]].append((g2.m, sink))
            continue
        if net.res[arc] < net.cap[arc] and net.res[arc ^ 1] > net.cap[arc ^ 1]:
            u, v = g2.edges[tag]
            succ[u].append((tag, v))
        elif net.res[arc ^ 1] < net.cap[arc ^ 1] and net.res[arc] > net.cap[arc]:
            u, v = g2.edges[tag]
            succ[v].append((tag, u))
    for lst in succ:
        lst.sort()
    walks = []
    for _ in range(2):
        verts = [w]
        edges = []
        v = w
        while True:
            tag, nxt = succ[v].pop(0)
            if nxt == sink:
                break
            edges.append(tag)
            verts.append(nxt)
            v = nxt
        walks.append(Trail(tuple(verts), tuple(edges)))
    return walks[0], walks[1]


def _subgraph_from_edges(g: Graph, edge_ids: frozenset):
    verts = sorted({v for eid in edge_ids for v in g.endpoints(eid)})
    vmap = {v: i for i, v in enumerate(verts)}
    eids = sorted(edge_ids)
    pairs = tuple((vmap[g.edges[e][0]], vmap[g.edges[e][1]]) for e in eids)
    sub = Graph(len(verts), pairs)
    return sub, vmap, verts, eids


def _lift_trail(t: Trail, verts: list[int], eids: list[int]) -> Trail:
    return Trail(
        tuple(verts[v] for v in t.vertices),
        tuple(eids[e] for e in t.edges),
    )


def extend_circuit(
    g: Graph, h: Trail, s_prefix: Iterable[int], e_next: int
) -> Trail | CutCertificate:
    """Circuit through s_prefix plus e_next, or an odd-cut certificate.

    h must be a circuit through s_prefix with every segment a path (run
    normalize_circuit first).
    """
    s_set = frozenset(s_prefix)
    if e_next in h.edge_set():
        return h
    h_edges = h.edge_set()
    leftover = g.all_edges() - h_edges
    bridges, components = bridges_and_2ec_components(g, leftover)
    if e_next in bridges:
        return bridge_case(g, h, s_set, e_next)
    comp = next(c for c in components if e_next in c.edges)
    shared = comp.vertices & frozenset(h.vertices)
    if shared:
        # splice: a closed trail inside the component through e_next and a
        # shared vertex, merged with h by an Euler tour of the union
        v = min(shared)
        sub, vmap, verts, eids = _subgraph_from_edges(g, comp.edges)
        local = _trail_through_edge(sub, eids.index(e_next), vmap[v], vmap[v])
        star = _lift_trail(local, verts, eids)
        union = h_edges | star.edge_set()
        out = euler_circuit(g, union, start=h.vertices[0])
        assert s_set <= out.edge_set() and e_next in out.edges
        return out
    # detached component: contract it, extend through one of its boundary
    # bridges, then open the contracted vertex into a trail through e_next
    boundary = edge_boundary(g, comp.vertices)
    assert boundary and boundary <= bridges
    e_f = min(boundary)
    contraction = contract_subgraph(g, comp.vertices)
    assert all(len(c) == 1 for c in contraction.edge_classes), (
        "boundary bridges of a detached 2-edge-connected component cannot "
        "share outside endpoints"
    )
    new_of_old = {c[0]: i for i, c in enumerate(contraction.edge_classes)}
    vmap_c = contraction.vertex_map
    h_c = Trail(
        tuple(vmap_c[v] for v in h.vertices),
        tuple(new_of_old[e] for e in h.edges),
    )
    s_c = frozenset(new_of_old[e] for e in s_set)
    outcome = bridge_case(contraction.graph, h_c, s_c, new_of_old[e_f])
    if isinstance(outcome, CutCertificate):
        lifted_side = contraction.lift_side(outcome.side)
        cert = certify(g, lifted_side)
        if cert.boundary != frozenset(
            contraction.representative(e) for e in outcome.boundary
        ) or not cert.odd:
            raise CoherenceViolated("contracted certificate did not lift cleanly")
        return cert
    return _open_contracted_vertex(
        g, contraction, outcome, comp, e_next
    )


def _open_contracted_vertex(g, contraction, circuit_c, comp, e_next) -> Trail:
    """Replace the single visit of the contracted vertex by a trail through
    e_next inside the component."""
    vd = contraction.contracted_vertex
    occurrences = [i for i, v in enumerate(circuit_c.vertices[:-1]) if v == vd]
    assert len(occurrences) == 1, "contracted vertex must be passed exactly once"
    rotated = _rotate_closed_trail(circuit_c, occurrences[0])
    old_vertex = {}
    for old, new in enumerate(contraction.vertex_map):
        if new != vd:
            old_vertex[new] = old
    outer_edges = [contraction.representative(e) for e in rotated.edges]
    first_orig = outer_edges[0]
    last_orig = outer_edges[-1]
    d_first = next(v for v in g.endpoints(first_orig) if v in comp.vertices)
    d_last = next(v for v in g.endpoints(last_orig) if v in comp.vertices)
    outer_verts = [d_first]
    outer_verts += [old_vertex[v] for v in rotated.vertices[1:-1]]
    outer_verts.append(d_last)
    outer = Trail(tuple(outer_verts), tuple(outer_edges))
    validate_trail(g, outer)
    sub, vmap, verts, eids = _subgraph_from_edges(g, comp.edges)
    local = _trail_through_edge(
        sub, eids.index(e_next), vmap[d_last], vmap[d_first]
    )
    inner = _lift_trail(local, verts, eids)
    out = trail_concat(outer, inner)
    validate_trail(g, out)
    assert out.is_closed
    return out


def _rotate_closed_trail(t: Trail, start_index: int) -> Trail:
    if start_index == 0:
        return t
    verts = t.vertices[start_index:-1] + t.vertices[: start_index + 1]
    edges = t.edges[start_index:] + t.edges[:start_index]
    return Trail(verts, edges)


def find_circuit(g: Graph, s: Iterable[int]) -> Trail | CutCertificate:
    """Circuit through every edge of s, or an odd cut of size at most |S|.

    A returned certificate refutes the universal condition (some odd cut has
    size at most |S|); the particular set s may still be feasible, which the
    exhaustive oracle can decide on small instances.
    """
    s_list = sorted(frozenset(s))
    if not s_list:
        raise EmptyPrescribed("need at least one prescribed edge")
    for eid in s_list:
        g.endpoints(eid)  # raises BadEdgeId
    if not is_connected(g):
        raise DisconnectedInput("find_circuit requires a connected graph")
    result = _base_circuit(g, s_list[0])
    if isinstance(result, CutCertificate):
        return result
    placed = {s_list[0]}
    for e_next in s_list[1:]:
        h = normalize_circuit(g, result, placed)
        result = extend_circuit(g, h, placed, e_next)
        if isinstance(result, CutCertificate):
            assert result.odd and result.size <= len(s_list)
            return result
        placed.add(e_next)
    assert frozenset(s_list) <= result.edge_set()
    return result
