"""Ideals built from the vertex covers of a graph.

Notation used below, for a graph G on [n] and a vertex set U:

* ``cover_ideal``            J(G), generated by x^W over minimal covers W
* ``j_upper(G, U)``          covers containing U
* ``j_lower(G, U)``          covers not containing U
* ``j_upper_tilde(G, U)``    x^U * J(G minus U)
* ``restricted_cover_ideal`` covers disjoint from T
* ``associated_ideal``       (x^{N(u)} : u on one side) of a bipartite graph
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError, StructureError
from .graph import SimpleGraph, set_to_mask
from .monomial import Monomial, MonomialIdeal, scale


@dataclass(frozen=True)
class BipartiteContext:
    """A bipartite graph together with a chosen side.

    ``left`` is the side whose neighbourhoods generate the associated
    ideal, and whose product x^left is the upper part of the splitting.
    """

    graph: SimpleGraph
    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        left, right = frozenset(self.left), frozenset(self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if left & right or (left | right) != frozenset(self.graph.vertices):
            raise StructureError("left/right must partition the vertex set")
        for u, v in self.graph.edges:
            if (u in left) == (v in left):
                raise StructureError(f"edge {{{u},{v}}} does not cross the partition")

    @classmethod
    def of(cls, graph: SimpleGraph, side: str = "L") -> BipartiteContext:
        """Context from the BFS bipartition; ``side`` picks which half is ``left``."""
        parts = graph.bipartition()
        if parts is None:
            raise PreconditionError("graph is not bipartite")
        first, second = parts
        if side.upper() == "L":
            return cls(graph, first, second)
        if side.upper() == "R":
            return cls(graph, second, first)
        raise ValueError(f"side must be L or R, got {side!r}")

    def swapped(self) -> BipartiteContext:
        return BipartiteContext(self.graph, self.right, self.left)


def _from_masks(n: int, masks: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(Monomial.from_mask(n, m) for m in masks))


def cover_ideal(graph: SimpleGraph) -> MonomialIdeal:
    """J(G); the unit ideal when G has no edges."""
    return _from_masks(graph.n, graph.minimal_cover_masks())


def edge_ideal(graph: SimpleGraph) -> MonomialIdeal:
    return MonomialIdeal.from_sets(graph.n, graph.edges)


def j_upper(graph: SimpleGraph, vertices: Iterable[int]) -> MonomialIdeal:
    u = set_to_mask(vertices)
    return _from_masks(graph.n, (w for w in graph.minimal_cover_masks() if w & u == u))


def _j_lower(graph: SimpleGraph, u: int) -> MonomialIdeal:
    # empty U is vacuous: every cover contains it, leaving the zero ideal
    return _from_masks(graph.n, (w for w in graph.minimal_cover_masks() if w & u != u))


def j_lower(graph: SimpleGraph, vertices: Iterable[int]) -> MonomialIdeal:
    vertices = frozenset(vertices)
    if not vertices:
        raise PreconditionError("j_lower needs a non-empty vertex set")
    return _j_lower(graph, set_to_mask(vertices))


def j_upper_tilde(graph: SimpleGraph, vertices: Iterable[int]) -> MonomialIdeal:
    vertices = frozenset(vertices)
    return scale(
        Monomial.from_set(graph.n, vertices), cover_ideal(graph.delete_vertices(vertices))
    )


def restricted_cover_ideal(graph: SimpleGraph, avoid: Iterable[int]) -> MonomialIdeal:
    """Covers lying inside the complement of ``avoid``."""
    t = set_to_mask(avoid)
    return _from_masks(graph.n, (w for w in graph.minimal_cover_masks() if not w & t))


def associated_ideal(ctx: BipartiteContext) -> MonomialIdeal:
    """(x^{N(u)} : u in ctx.left), minimalized, in the ambient ring."""
    graph = ctx.graph
    gens = []
    for u in sorted(ctx.left):
        nbrs = graph.neighbourhood(u)
        if not nbrs:
            raise PreconditionError(f"vertex {u} on the generating side is isolated")
        gens.append(Monomial.from_set(graph.n, nbrs))
    return MonomialIdeal(graph.n, tuple(gens))


def bipartite_from_ideal(ideal: MonomialIdeal) -> SimpleGraph:
    """Graph on m + l vertices realising a squarefree ideal as its associated ideal.

    Generator number i (canonical order) becomes vertex m + i, joined to
    every variable it uses; ``BipartiteContext(g, {m+1..m+l}, {1..m})``
    then recovers ``ideal`` via :func:`associated_ideal`.
    """
    if not ideal.is_squarefree():
        raise PreconditionError("ideal must be squarefree")
    if ideal.is_zero() or ideal.is_unit():
        raise PreconditionError("ideal must be proper and nonzero")
    m = ideal.n
    edges = [
        (j, m + i)
        for i, g in enumerate(ideal.gens, start=1)
        for j in sorted(g.support)
    ]
    return SimpleGraph(m + len(ideal.gens), edges)


def generator_side_context(graph: SimpleGraph, m: int) -> BipartiteContext:
    """Context for a graph built by :func:`bipartite_from_ideal` on m variables."""
    return BipartiteContext(
        graph, frozenset(range(m + 1, graph.n + 1)), frozenset(range(1, m + 1))
    )
