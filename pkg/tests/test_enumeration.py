import itertools
import random

import pytest
from hypothesis import given, strategies as st

from coverbetti.enumeration import (
    canonical_form,
    canonical_graph,
    connected_bipartite_graphs,
    connected_graphs,
    graphs_up_to_iso,
    random_graph,
    random_graph_with_leaf,
)
from coverbetti.graph import SimpleGraph

from conftest import graphs

# OEIS A000088, A001349, A005142
ALL = [1, 2, 4, 11, 34, 156]
CONNECTED = [1, 1, 2, 6, 21, 112, 853]
CONNECTED_BIPARTITE = [1, 1, 1, 3, 5, 17, 44]


@pytest.mark.parametrize("n", range(1, 7))
def test_graph_counts(n):
    assert len(graphs_up_to_iso(n)) == ALL[n - 1]


def test_connected_counts():
    for n in range(1, 8):
        assert sum(1 for _ in connected_graphs(n, min_n=n)) == CONNECTED[n - 1]
        assert sum(1 for _ in connected_bipartite_graphs(n, min_n=n)) == CONNECTED_BIPARTITE[n - 1]


def _labelled_classes(n):
    """Isomorphism classes of labelled graphs on n vertices by brute force."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    perms = list(itertools.permutations(range(1, n + 1)))
    seen = set()
    classes = 0
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        if edges in seen:
            continue
        classes += 1
        for perm in perms:
            seen.add(frozenset(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in edges))
    return classes


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_brute_force(n):
    assert len(graphs_up_to_iso(n)) == _labelled_classes(n)


@given(graphs(1, 7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(graph, rng):
    perm = list(graph.vertices)
    rng.shuffle(perm)
    other = graph.relabel(dict(zip(graph.vertices, perm)))
    assert canonical_form(graph)[0] == canonical_form(other)[0]
    assert canonical_graph(graph) == canonical_graph(other)


def test_non_isomorphic_graphs_get_distinct_keys():
    keys = [canonical_form(g)[0] for g in graphs_up_to_iso(6)]
    assert len(set(keys)) == len(keys)


def test_random_graph_helpers():
    rng = random.Random(7)
    g = random_graph(rng, 6, 0.0)
    assert g == SimpleGraph(6)
    for _ in range(20):
        h = random_graph_with_leaf(rng, 6)
        assert h.degree(6) == 1
