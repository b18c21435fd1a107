import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from circuitcover.graphs import Graph


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def bowtie() -> Graph:
    # two triangles sharing vertex 0
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def triangles_with_bridge() -> Graph:
    # triangles {0,1,2} and {3,4,5} joined by edge (0,3) = id 6
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3)])


@st.composite
def connected_graphs(draw, min_n=2, max_n=8, max_extra=8):
    """Random connected simple graph: a random recursive tree plus extras."""
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    spare = sorted(set(combinations(range(n), 2)) - {tuple(sorted(e)) for e in tree})
    k = draw(st.integers(0, min(max_extra, len(spare))))
    extra = draw(st.permutations(spare))[:k] if spare else []
    edges = sorted({tuple(sorted(e)) for e in tree} | set(extra))
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def small_random_graphs():
    """A deterministic spread of small connected graphs for cross-checks."""
    from circuitcover.generators import random_connected

    out = []
    rng = random.Random(99)
    for seed in range(60):
        n = rng.randint(4, 9)
        m = rng.randint(n - 1, min(n * (n - 1) // 2, n + 7))
        out.append(random_connected(n, m, 1, seed=seed).graph)
    return out
