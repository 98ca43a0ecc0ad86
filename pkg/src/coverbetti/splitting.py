"""Partitions of monomial ideals and the Betti splitting test."""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, betti_table
from .errors import StructureError
from .linalg import QQ, FieldSpec
from .monomial import MonomialIdeal, Multidegree, intersect


@dataclass(frozen=True)
class IdealPartition:
    """(K, L) with G(whole) = G(K) disjoint-union G(L)."""

    whole: MonomialIdeal
    left: MonomialIdeal
    right: MonomialIdeal

    def __post_init__(self):
        if not (self.whole.n == self.left.n == self.right.n):
            raise StructureError("partition parts live in different rings")
        k, l = set(self.left.gens), set(self.right.gens)
        if k & l:
            raise StructureError("partition parts share a generator")
        if k | l != set(self.whole.gens):
            raise StructureError("parts do not recover the minimal generators")

    @classmethod
    def of(cls, left: MonomialIdeal, right: MonomialIdeal) -> IdealPartition:
        return cls(left + right, left, right)

    def meet(self) -> MonomialIdeal:
        return intersect(self.left, self.right)

    def is_trivial(self) -> bool:
        return self.left.is_zero() or self.right.is_zero()


def x_partition(ideal: MonomialIdeal, v: int) -> IdealPartition:
    """Split G(I) by divisibility by x_v; the divisible part is ``left``."""
    if not 1 <= v <= ideal.n:
        raise StructureError(f"variable x{v} outside x1..x{ideal.n}")
    divisible = tuple(g for g in ideal.gens if g.exps[v - 1] > 0)
    rest = tuple(g for g in ideal.gens if g.exps[v - 1] == 0)
    return IdealPartition(ideal, MonomialIdeal(ideal.n, divisible), MonomialIdeal(ideal.n, rest))


@dataclass(frozen=True)
class SplitWitness:
    i: int
    j: int
    lhs: int
    rhs: int

    def __str__(self) -> str:
        return f"SPLIT FAIL at (i={self.i}, j={self.j}): lhs={self.lhs}, rhs={self.rhs}"


@dataclass(frozen=True)
class SplitCheck:
    """Outcome of :func:`is_betti_splitting`; truthy when the partition splits."""

    ok: bool
    witness: SplitWitness | None = None
    violations: tuple[SplitWitness, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PartitionTables:
    whole: BettiTable
    left: BettiTable
    right: BettiTable
    meet: BettiTable
    degree_bound: int


def partition_tables(part: IdealPartition, field: FieldSpec = QQ) -> PartitionTables:
    return PartitionTables(
        betti_table(part.whole, field),
        betti_table(part.left, field),
        betti_table(part.right, field),
        betti_table(part.meet(), field),
        part.whole.lcm_all().degree,
    )


def is_betti_splitting(part: IdealPartition, field: FieldSpec = QQ) -> SplitCheck:
    """Check beta_{i,j}(I) = beta_{i,j}(K) + beta_{i,j}(L) + beta_{i-1,j}(K cap L).

    Every i >= 1 and every j up to the total degree of lcm(G(I)) is
    checked; past that bound all four tables vanish. The i = 0 identity
    follows from disjointness of generators and is asserted too.
    """
    t = partition_tables(part, field)
    bad = []
    top_i = max(t.whole.max_index(), t.left.max_index(), t.right.max_index(),
                t.meet.max_index() + 1, 0)
    for i in range(0, top_i + 1):
        for j in range(0, t.degree_bound + 1):
            lhs = t.whole.graded(i, j)
            rhs = t.left.graded(i, j) + t.right.graded(i, j)
            if i >= 1:
                rhs += t.meet.graded(i - 1, j)
            if lhs != rhs:
                if i == 0:
                    raise AssertionError(f"generator count mismatch in degree {j}")
                bad.append(SplitWitness(i, j, lhs, rhs))
    return SplitCheck(not bad, bad[0] if bad else None, tuple(bad))


def multigraded_split_violations(
    part: IdealPartition, field: FieldSpec = QQ
) -> list[tuple[int, Multidegree, int, int]]:
    """Positions where the multigraded form of the splitting identity fails."""
    t = partition_tables(part, field)
    keys = set(t.whole.entries) | set(t.left.entries) | set(t.right.entries)
    keys |= {(i + 1, a) for i, a in t.meet.entries}
    out = []
    for i, a in sorted(keys):
        if i == 0:
            continue
        lhs = t.whole.get(i, a)
        rhs = t.left.get(i, a) + t.right.get(i, a) + t.meet.get(i - 1, a)
        if lhs != rhs:
            out.append((i, a, lhs, rhs))
    return out
