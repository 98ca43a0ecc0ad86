"""Multigraded Betti numbers of monomial ideals.

Two independent routes:

* the upper Koszul simplicial complex K^a(I) = {W <= supp(a) : x^(a-W) in I},
  whose reduced homology in degree i-1 gives beta_{i,a}(I);
* the degree-a strand of the Taylor complex tensored with the field.

The first is the workhorse; the second is exponential in the number of
generators and serves as an oracle.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BudgetExceeded, PreconditionError, StructureError
from .homology import SimplicialComplex, reduced_homology_dims
from .linalg import QQ, FieldSpec, rank_of_rows
from .monomial import (
    Monomial,
    MonomialIdeal,
    Multidegree,
    degree_of_mask,
    dominates,
    mask_of,
)

TAYLOR_MAX_GENERATORS = 18


@dataclass(frozen=True)
class BettiTable:
    """Nonzero beta_{i,a}, keyed by (i, a). Zeros are never stored."""

    n: int
    entries: dict[tuple[int, Multidegree], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in self.entries.items() if v}
        for (i, a), v in clean.items():
            if i < 0 or len(a) != self.n or v < 0:
                raise StructureError(f"bad Betti entry {(i, a)}: {v}")
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.n, tuple(self.entries.items())))

    def get(self, i: int, a: Multidegree) -> int:
        return self.entries.get((i, tuple(a)), 0)

    def graded(self, i: int, j: int) -> int:
        return betti_graded(self, i, j)

    def graded_entries(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, a), v in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + v
        return dict(sorted(out.items()))

    def max_total_degree(self) -> int:
        return max((sum(a) for _, a in self.entries), default=0)

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def to_json(self) -> dict:
        return {
            "entries": [
                {"i": i, "a": list(a), "value": v} for (i, a), v in self.entries.items()
            ]
        }

    @classmethod
    def from_json(cls, n: int, data: dict) -> BettiTable:
        return cls(n, {(e["i"], tuple(e["a"])): e["value"] for e in data["entries"]})

    def render(self) -> str:
        return "\n".join(
            f"{i}  {_degree_string(a)}  {v}" for (i, a), v in self.entries.items()
        )

    def render_graded(self) -> str:
        return "\n".join(f"{i}  {j}  {v}" for (i, j), v in self.graded_entries().items())


def _degree_string(a: Multidegree) -> str:
    if all(e < 10 for e in a):
        return "".join(str(e) for e in a)
    return ",".join(str(e) for e in a)


def betti_graded(table: BettiTable, i: int, j: int) -> int:
    return sum(v for (k, a), v in table.entries.items() if k == i and sum(a) == j)


# ---------------------------------------------------------------- Koszul route


def upper_koszul_complex(ideal: MonomialIdeal, a: Multidegree) -> SimplicialComplex:
    a = tuple(a)
    if len(a) != ideal.n:
        raise StructureError(f"multidegree has {len(a)} entries, ideal has {ideal.n}")
    if any(e < 0 for e in a):
        raise StructureError("multidegree entries must be non-negative")
    supp = mask_of(a)
    if ideal.is_squarefree():
        # x^(a-W) in I  iff  some squarefree g <= a has W missing every i in g with a_i == 1
        ones = mask_of(tuple(1 if e == 1 else 0 for e in a))
        facets = [supp & ~(g.mask & ones) for g in ideal.gens if dominates(a, g.exps)]
        return SimplicialComplex.from_facet_masks(ideal.n, facets)
    faces = []
    sub = supp
    while True:
        rest = Monomial(tuple(e - ((sub >> k) & 1) for k, e in enumerate(a)))
        if rest in ideal:
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & supp
    return SimplicialComplex(ideal.n, frozenset(faces))


def _koszul_strand(
    ideal: MonomialIdeal, a: Multidegree, field: FieldSpec
) -> dict[int, int]:
    """Nonzero beta_{i,a} for one multidegree, keyed by i."""
    cx = upper_koszul_complex(ideal, a)
    if cx.is_void():
        return {}
    if len(cx.faces) > 1:
        common = ~0
        for f in _facet_masks(cx):
            common &= f
        if common:
            return {}  # a cone is acyclic
    return {d + 1: h for d, h in reduced_homology_dims(cx, field).items() if h}


def _facet_masks(cx: SimplicialComplex) -> list[int]:
    faces = cx.faces
    out = []
    for f in faces:
        comp = ~f & ((1 << cx.size) - 1)
        bits = comp
        maximal = True
        while bits:
            low = bits & -bits
            if f | low in faces:
                maximal = False
                break
            bits ^= low
        if maximal:
            out.append(f)
    return out


def betti_multidegree(
    ideal: MonomialIdeal, i: int, a: Multidegree, field: FieldSpec = QQ
) -> int:
    if i < 0:
        raise PreconditionError("homological index must be >= 0")
    return _koszul_strand(ideal, tuple(a), field).get(i, 0)


def _candidate_masks(ideal: MonomialIdeal) -> list[int]:
    gens = ideal.masks()
    top = 0
    for g in gens:
        top |= g
    out = []
    sub = top
    while True:
        if any(sub & g == g for g in gens):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & top
    return sorted(out)


def _strands_chunk(args) -> list[tuple[int, Multidegree, int]]:
    ideal, field, masks = args
    out = []
    for m in masks:
        a = degree_of_mask(ideal.n, m)
        for i, v in _koszul_strand(ideal, a, field).items():
            out.append((i, a, v))
    return out


@lru_cache(maxsize=4096)
def _cached_table(ideal: MonomialIdeal, field: FieldSpec) -> BettiTable:
    return BettiTable(
        ideal.n,
        {(i, a): v for i, a, v in _strands_chunk((ideal, field, _candidate_masks(ideal)))},
    )


def betti_table(
    ideal: MonomialIdeal,
    field: FieldSpec = QQ,
    workers: int = 1,
    non_squarefree: str = "taylor",
) -> BettiTable:
    """Full multigraded Betti table.

    Squarefree ideals only need squarefree multidegrees below the lcm of
    the generators. Other ideals go to the Taylor oracle, or raise when
    ``non_squarefree="reject"``.
    """
    if not ideal.is_squarefree():
        if non_squarefree == "reject":
            raise PreconditionError("betti_table needs a squarefree ideal")
        return taylor_table(ideal, field)
    if workers <= 1:
        return _cached_table(ideal, field)
    masks = _candidate_masks(ideal)
    chunks = [masks[k::workers] for k in range(workers)]
    entries = {}
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_strands_chunk, [(ideal, field, c) for c in chunks]):
            for i, a, v in part:
                entries[(i, a)] = v
    return BettiTable(ideal.n, entries)


# ---------------------------------------------------------------- Taylor route


def _lcm(vectors) -> Multidegree:
    return tuple(max(col) for col in zip(*vectors))


def _check_budget(r: int, budget: int) -> None:
    if r > budget:
        raise BudgetExceeded(f"{r} generators exceed the Taylor budget of {budget}")


def _taylor_strand(
    gens: list[Multidegree], a: Multidegree, field: FieldSpec
) -> dict[int, int]:
    """Homology of the degree-``a`` Taylor strand; keys are homological index."""
    gens = [g for g in gens if dominates(a, g)]
    r = len(gens)
    if not gens or _lcm(gens) != a:
        return {}
    basis: dict[int, list[int]] = {}
    for s in range(1, 1 << r):
        members = [gens[k] for k in range(r) if s >> k & 1]
        if _lcm(members) == a:
            basis.setdefault(s.bit_count() - 1, []).append(s)
    ranks: dict[int, int] = {}
    for k, sets in basis.items():
        if k == 0 or k - 1 not in basis:
            continue
        index = {s: j for j, s in enumerate(basis[k - 1])}
        rows = []
        for s in sets:
            row = {}
            j = 0
            bits = s
            while bits:
                low = bits & -bits
                face = s ^ low
                if face in index:
                    row[index[face]] = -1 if j % 2 else 1
                bits ^= low
                j += 1
            rows.append(row)
        ranks[k] = rank_of_rows(rows, field)
    out = {}
    for k, sets in basis.items():
        h = len(sets) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def taylor_betti(
    ideal: MonomialIdeal,
    i: int,
    a: Multidegree,
    field: FieldSpec = QQ,
    max_generators: int = TAYLOR_MAX_GENERATORS,
) -> int:
    if i < 0:
        raise PreconditionError("homological index must be >= 0")
    _check_budget(len(ideal.gens), max_generators)
    return _taylor_strand([g.exps for g in ideal.gens], tuple(a), field).get(i, 0)


def taylor_table(
    ideal: MonomialIdeal, field: FieldSpec = QQ, max_generators: int = TAYLOR_MAX_GENERATORS
) -> BettiTable:
    """Betti table from the Taylor complex: one strand per lcm of a generator subset."""
    r = len(ideal.gens)
    _check_budget(r, max_generators)
    gens = [g.exps for g in ideal.gens]
    lcms = set()
    for size in range(1, r + 1):
        for combo in itertools.combinations(gens, size):
            lcms.add(_lcm(combo))
    entries = {}
    for a in lcms:
        for i, v in _taylor_strand(gens, a, field).items():
            entries[(i, a)] = v
    return BettiTable(ideal.n, entries)


def squarefree_multidegrees(n: int):
    for m in range(1 << n):
        yield degree_of_mask(n, m)

