"""Hypothesis strategies shared by the property tests."""

import itertools

from hypothesis import strategies as st

from distspec.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


@st.composite
def connected_graphs(draw, min_n=2, max_n=10):
    """Random connected graphs: a random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [p for p in itertools.combinations(range(n), 2) if p not in edges]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(p for p, b in zip(pairs, bits) if b)
    perm = draw(st.permutations(range(n)))
    g = Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    assert is_connected(g)
    return g
