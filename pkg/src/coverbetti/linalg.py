"""Exact matrix rank over Q or GF(p).

Only small integer matrices show up (boundary maps with +-1 entries), so
rows are kept as sparse ``{col: value}`` dicts and reduced one at a time
against the pivots found so far. Over Q the reduction is fraction-free:
rows stay integral and are divided by their content after every step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import StructureError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, else GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def kind(self) -> str:
        return "rationals" if self.p == 0 else "prime"

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """``q`` / ``Q`` / ``rationals`` or ``p:<prime>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls(0)
        if t.startswith("p:"):
            try:
                return cls(int(t[2:]))
            except ValueError as exc:
                raise ValueError(f"bad field spec {text!r}: {exc}") from None
        raise ValueError(f"bad field spec {text!r}; use 'q' or 'p:<prime>'")

    def __str__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"


QQ = FieldSpec(0)
GF32003 = FieldSpec(32003)


@dataclass
class SparseMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise StructureError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            if v == 0:
                del self.entries[(r, c)]

    @classmethod
    def from_dense(cls, dense: list[list[int]]) -> SparseMatrix:
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        return cls(
            rows,
            cols,
            {(r, c): v for r, row in enumerate(dense) for c, v in enumerate(row) if v},
        )

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def row_dicts(self) -> list[dict[int, int]]:
        out: list[dict[int, int]] = [{} for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out


def _normalize_q(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def _rank_q(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _normalize_q(row)
                break
            a, b = piv[lead], row[lead]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                x = new.get(c, 0) - b * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _normalize_q(new) if new else new
    return len(pivots)


def _rank_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            b = row[lead]
            for c, v in piv.items():
                x = (row.get(c, 0) - b * v) % p
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
    return len(pivots)


def rank_of_rows(rows: Iterable[dict[int, int]], field: FieldSpec = QQ) -> int:
    """Rank of a matrix given as sparse integer rows."""
    if field.p == 0:
        return _rank_q(rows)
    return _rank_p(rows, field.p)


def rank(matrix: SparseMatrix, field: FieldSpec = QQ) -> int:
    return rank_of_rows(matrix.row_dicts(), field)
