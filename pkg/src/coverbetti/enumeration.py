"""Small graphs up to isomorphism, and random graphs.

Canonical form: colour refinement by degree, then brute force over the
orderings that respect the refined colour classes, keeping the least
upper-triangle adjacency bitstring. Exact, and fast enough for n <= 8.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

from .graph import SimpleGraph


def _refine(n: int, adj: list[set[int]]) -> list[int]:
    colour = [len(adj[v]) for v in range(n)]
    while True:
        sigs = [(colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def canonical_form(graph: SimpleGraph) -> tuple[str, dict[int, int]]:
    """(canonical key, relabelling old -> new) for ``graph``.

    Two graphs on the same n are isomorphic iff their keys agree. The key
    is the sorted degree sequence followed by the least adjacency bitstring.
    """
    n = graph.n
    adj = [set() for _ in range(n)]
    for u, v in graph.edges:
        adj[u - 1].add(v - 1)
        adj[v - 1].add(u - 1)
    colour = _refine(n, adj)
    cells = [
        [v for v in range(n) if colour[v] == c] for c in sorted(set(colour))
    ]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = None
    best_order = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        bits = "".join("1" if order[j] in adj[order[i]] else "0" for i, j in pairs)
        if best is None or bits < best:
            best, best_order = bits, order
    degrees = "".join(str(len(a)) for a in sorted(adj, key=len))
    relabel = {old + 1: new + 1 for new, old in enumerate(best_order or [])}
    return f"{n}:{degrees}:{best or ''}", relabel


def canonical_graph(graph: SimpleGraph) -> SimpleGraph:
    return graph.relabel(canonical_form(graph)[1])


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[SimpleGraph, ...]:
    if n == 0:
        return (SimpleGraph(0),)
    if n == 1:
        return (SimpleGraph(1),)
    found: dict[str, SimpleGraph] = {}
    for base in _graphs_on(n - 1):
        for nbrs in range(1 << (n - 1)):
            edges = list(base.edges) + [
                (u, n) for u in range(1, n) if nbrs >> (u - 1) & 1
            ]
            g = SimpleGraph(n, edges)
            key, relabel = canonical_form(g)
            if key not in found:
                found[key] = g.relabel(relabel)
    return tuple(found[k] for k in sorted(found, key=lambda k: (len(found[k].edges), k)))


def graphs_up_to_iso(n: int) -> tuple[SimpleGraph, ...]:
    """One canonically labelled representative per isomorphism class on n vertices,
    ordered by edge count and then canonical key."""
    return _graphs_on(n)


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[SimpleGraph]:
    for n in range(min_n, max_n + 1):
        for g in graphs_up_to_iso(n):
            if g.is_connected():
                yield g


def connected_bipartite_graphs(max_n: int, min_n: int = 1) -> Iterator[SimpleGraph]:
    for g in connected_graphs(max_n, min_n):
        if g.is_bipartite():
            yield g


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph(
        n,
        ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p),
    )


def random_graph_with_leaf(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    """Random graph on n >= 2 vertices where vertex n is forced to be a leaf."""
    base = random_graph(rng, n - 1, p)
    anchor = rng.randint(1, n - 1)
    return SimpleGraph(n, list(base.edges) + [(anchor, n)])
