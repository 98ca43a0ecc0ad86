"""Finite simple graphs on the vertex set {1, ..., n}.

Deleting vertices never shrinks ``n``: removed vertices just lose their
edges, so every ideal built from a subgraph lives in the same ring.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, PreconditionError, StructureError


def _bit(v: int) -> int:
    return 1 << (v - 1)


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= _bit(v)
    return m


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise StructureError("vertex count must be non-negative")
        norm = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise StructureError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise StructureError(f"edge {{{u},{v}}} outside 1..{n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise PreconditionError(f"vertex {v} outside 1..{self.n}")

    def adjacency_masks(self) -> list[int]:
        """``adj[v]`` is the neighbour bitmask of vertex ``v`` (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= _bit(v)
            adj[v] |= _bit(u)
        return adj

    def neighbourhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def degree(self, v: int) -> int:
        return len(self.neighbourhood(v))

    def is_isolated(self, v: int) -> bool:
        return not self.neighbourhood(v)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        w = set(vertices)
        return not any(u in w and v in w for u, v in self.edges)

    def is_vertex_cover(self, vertices: Iterable[int]) -> bool:
        w = set(vertices)
        return all(u in w or v in w for u, v in self.edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self._component(1, self.adjacency_masks())) == self.n

    def _component(self, start: int, adj: list[int]) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in mask_to_set(adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """BFS 2-colouring; the lowest vertex of each component goes left.

        Returns None when the graph has an odd cycle.
        """
        adj = self.adjacency_masks()
        colour: dict[int, int] = {}
        for start in self.vertices:
            if start in colour:
                continue
            colour[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in mask_to_set(adj[u]):
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        queue.append(w)
                    elif colour[w] == colour[u]:
                        return None
        left = frozenset(v for v, c in colour.items() if c == 0)
        right = frozenset(v for v, c in colour.items() if c == 1)
        return left, right

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def cover_masks(self) -> list[int]:
        """Every vertex cover, as bitmasks in increasing order (2^n scan)."""
        edge_masks = [_bit(u) | _bit(v) for u, v in self.edges]
        return [
            w for w in range(1 << self.n) if all(w & e for e in edge_masks)
        ]

    def minimal_cover_masks(self) -> list[int]:
        covers = self.cover_masks()
        cover_set = set(covers)
        out = []
        for w in covers:
            # minimal iff dropping any single vertex breaks the cover
            bits = w
            minimal = True
            while bits:
                low = bits & -bits
                if (w ^ low) in cover_set:
                    minimal = False
                    break
                bits ^= low
            if minimal:
                out.append(w)
        return out

    def minimal_vertex_covers(self) -> list[frozenset[int]]:
        return [mask_to_set(w) for w in self.minimal_cover_masks()]

    def vertex_covers(self) -> list[frozenset[int]]:
        return [mask_to_set(w) for w in self.cover_masks()]

    def delete_vertices(self, vertices: Iterable[int]) -> SimpleGraph:
        gone = set(vertices)
        for v in gone:
            self._check_vertex(v)
        return SimpleGraph(
            self.n, (e for e in self.edges if e[0] not in gone and e[1] not in gone)
        )

    def relabel(self, perm: dict[int, int]) -> SimpleGraph:
        return SimpleGraph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def leaves(self) -> Iterator[int]:
        for v in self.vertices:
            if self.degree(v) == 1:
                yield v

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"e {u} {v}" for u, v in self.sorted_edges()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self) -> str:
        body = ", ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"G(n={self.n}; {body})"


def parse_graph_text(text: str) -> SimpleGraph:
    """Parse the edge-list format: ``n <N>`` then ``e <u> <v>`` lines, ``#`` comments."""
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError("duplicate 'n' line", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(f"expected 'n <N>', got {line!r}", lineno)
            n = int(tokens[1])
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge before 'n' line", lineno)
            if len(tokens) != 3 or not (tokens[1].isdigit() and tokens[2].isdigit()):
                raise ParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
            u, v = int(tokens[1]), int(tokens[2])
            if u == v:
                raise ParseError(f"loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge {u} {v} outside 1..{n}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown record {tokens[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'n <N>' line")
    return SimpleGraph(n, edges)


def parse_graph_json(data: dict) -> SimpleGraph:
    try:
        n = int(data["n"])
        raw = [tuple(int(x) for x in e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from exc
    keys = [(min(e), max(e)) for e in raw]
    if len(set(keys)) != len(keys):
        raise ParseError("duplicate edge in graph JSON")
    try:
        return SimpleGraph(n, raw)
    except StructureError as exc:
        raise ParseError(str(exc)) from exc


def parse_graph(text: str) -> SimpleGraph:
    """Parse either format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
        return parse_graph_json(data)
    return parse_graph_text(text)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def star_graph(leaves: int) -> SimpleGraph:
    """Centre 1, leaves 2..leaves+1."""
    return SimpleGraph(leaves + 1, ((1, v) for v in range(2, leaves + 2)))
