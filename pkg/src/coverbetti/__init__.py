"""Cover ideals of graphs, their multigraded Betti numbers, and Betti splittings."""

from .betti import BettiTable, betti_multidegree, betti_table, taylor_betti, taylor_table
from .cover_ideals import (
    BipartiteContext,
    associated_ideal,
    bipartite_from_ideal,
    cover_ideal,
    edge_ideal,
    j_lower,
    j_upper,
    j_upper_tilde,
    restricted_cover_ideal,
)
from .graph import SimpleGraph, parse_graph
from .linalg import GF32003, QQ, FieldSpec
from .monomial import Monomial, MonomialIdeal, parse_ideal

__version__ = "0.1.0"
