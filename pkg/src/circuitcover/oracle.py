"""Ground-truth feasibility by exhaustive search over the cycle space.

A circuit through S exists iff some connected even edge set contains S;
even edge sets are exactly the GF(2) span of the fundamental cycles of a
spanning forest, enumerated here with Gray-code updates.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import TooLarge
from .graphs import Graph, Trail, connected_components, euler_circuit

_DIM_GUARD = 24


@dataclass(frozen=True)
class CycleSpaceBasis:
    """Fundamental cycles of a spanning forest, as edge-id bitmasks."""

    masks: tuple[int, ...]
    forest_edges: frozenset

    @property
    def dim(self) -> int:
        return len(self.masks)


def cycle_space_basis(g: Graph) -> CycleSpaceBasis:
    parent: list[int] = [-1] * g.n
    parent_edge: list[int] = [-1] * g.n
    depth = [0] * g.n
    forest: set[int] = set()
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for w, eid in reversed(g.adjacency[v]):
                if seen[w]:
                    continue
                seen[w] = True
                parent[w] = v
                parent_edge[w] = eid
                depth[w] = depth[v] + 1
                forest.add(eid)
                stack.append(w)
    masks = []
    for eid, (u, v) in enumerate(g.edges):
        if eid in forest:
            continue
        mask = 1 << eid
        x, y = u, v
        while depth[x] > depth[y]:
            mask ^= 1 << parent_edge[x]
            x = parent[x]
        while depth[y] > depth[x]:
            mask ^= 1 << parent_edge[y]
            y = parent[y]
        while x != y:
            mask ^= 1 << parent_edge[x]
            mask ^= 1 << parent_edge[y]
            x = parent[x]
            y = parent[y]
        masks.append(mask)
    return CycleSpaceBasis(tuple(masks), frozenset(forest))


def _mask_to_edges(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def _is_connected_edge_set(g: Graph, edges: frozenset) -> bool:
    return len(connected_components(g, edges)) <= 1


def feasible_by_bruteforce(g: Graph, s: Iterable[int]) -> Trail | None:
    """Euler tour of the first connected even superset of s in Gray-code
    order, or None when no such edge set exists."""
    s_set = frozenset(s)
    basis = cycle_space_basis(g)
    if basis.dim > _DIM_GUARD:
        raise TooLarge(f"cycle-space dimension {basis.dim} exceeds guard {_DIM_GUARD}")
    s_mask = 0
    for eid in s_set:
        if not (0 <= eid < g.m):
            raise ValueError(f"edge id {eid} out of range")
        s_mask |= 1 << eid
    f = 0
    for step in range(1 << basis.dim):
        if step:
            f ^= basis.masks[(step & -step).bit_length() - 1]
        if s_mask & ~f:
            continue
        edges = _mask_to_edges(f)
        if _is_connected_edge_set(g, edges):
            return euler_circuit(g, edges)
    return None


def enumerate_connected_even_sets(g: Graph) -> list[int]:
    """All nonempty connected even edge sets, as bitmasks, largest first."""
    basis = cycle_space_basis(g)
    if basis.dim > _DIM_GUARD:
        raise TooLarge(f"cycle-space dimension {basis.dim} exceeds guard {_DIM_GUARD}")
    out = []
    f = 0
    for step in range(1 << basis.dim):
        if step:
            f ^= basis.masks[(step & -step).bit_length() - 1]
        if f and _is_connected_edge_set(g, _mask_to_edges(f)):
            out.append(f)
    out.sort(key=lambda mask: -mask.bit_count())
    return out


def feasible_subsets(g: Graph, max_size: int) -> frozenset:
    """Every feasible prescribed set of size 1..max_size, as frozensets.

    Batch counterpart of feasible_by_bruteforce: S is feasible iff it lies
    inside some connected even edge set.
    """
    out: set[frozenset] = set()
    for mask in enumerate_connected_even_sets(g):
        edges = sorted(_mask_to_edges(mask))
        for size in range(1, min(max_size, len(edges)) + 1):
            for combo in combinations(edges, size):
                out.add(frozenset(combo))
    return frozenset(out)


def check_parity_monotonicity(g: Graph, k: int) -> bool:
    """True iff feasibility of every (2k-1)-set implies feasibility of every
    2k-set, checked exhaustively (m <= 16 guard)."""
    if g.m > 16:
        raise TooLarge(f"guard: m={g.m} > 16")
    if k < 1:
        raise ValueError("k must be positive")
    even_sets = enumerate_connected_even_sets(g)

    def all_feasible(size: int) -> bool:
        if size > g.m:
            return True
        for combo in combinations(range(g.m), size):
            s_mask = 0
            for eid in combo:
                s_mask |= 1 << eid
            if not any(s_mask & ~f == 0 for f in even_sets):
                return False
        return True

    return (not all_feasible(2 * k - 1)) or all_feasible(2 * k)
