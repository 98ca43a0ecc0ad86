"""Reduced simplicial homology over a field.

Faces are bitmasks over a ground set {1..size}. The void complex (no
faces) and the irrelevant complex (only the empty face) are different
values: the first is acyclic in every degree, the second has one class in
degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import StructureError
from .graph import mask_to_set, set_to_mask
from .linalg import QQ, FieldSpec, rank_of_rows


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class SimplicialComplex:
    size: int
    faces: frozenset[int]

    def __post_init__(self):
        faces = frozenset(self.faces)
        object.__setattr__(self, "faces", faces)
        full = (1 << self.size) - 1
        for f in faces:
            if f & ~full:
                raise StructureError(f"face {sorted(mask_to_set(f))} outside ground set")
            bits = f
            while bits:
                low = bits & -bits
                if f ^ low not in faces:
                    raise StructureError(
                        f"not downward closed: {sorted(mask_to_set(f))} lacks "
                        f"{sorted(mask_to_set(f ^ low))}"
                    )
                bits ^= low

    @classmethod
    def void(cls, size: int) -> SimplicialComplex:
        return cls(size, frozenset())

    @classmethod
    def irrelevant(cls, size: int) -> SimplicialComplex:
        return cls(size, frozenset({0}))

    @classmethod
    def from_facet_masks(cls, size: int, facets: Iterable[int]) -> SimplicialComplex:
        faces: set[int] = set()
        for f in facets:
            if f in faces:
                continue
            faces.update(_subsets(f))
        return cls(size, frozenset(faces))

    @classmethod
    def from_facets(cls, size: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        return cls.from_facet_masks(size, (set_to_mask(f) for f in facets))

    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        """-1 for the irrelevant complex; -2 stands in for the void one."""
        if not self.faces:
            return -2
        return max(f.bit_count() for f in self.faces) - 1

    def faces_by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for f in self.faces:
            out.setdefault(f.bit_count() - 1, []).append(f)
        for d in out:
            out[d].sort()
        return out

    def facets(self) -> list[frozenset[int]]:
        maximal = [
            f for f in self.faces
            if not any(g != f and g & f == f for g in self.faces)
        ]
        return sorted((mask_to_set(f) for f in maximal), key=sorted)

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces_by_dim().items()}

    def cone(self) -> SimplicialComplex:
        """Cone over a new apex vertex ``size + 1``."""
        apex = 1 << self.size
        return SimplicialComplex(
            self.size + 1, self.faces | frozenset(f | apex for f in self.faces)
        )


def boundary_rows(lower: list[int], upper: list[int]) -> list[dict[int, int]]:
    """Rows of the boundary map from ``upper`` faces to ``lower`` faces.

    One row per upper face (so this is the transpose of the usual matrix,
    which leaves the rank unchanged). Sign of dropping the j-th smallest
    vertex is (-1)^j.
    """
    index = {f: k for k, f in enumerate(lower)}
    rows = []
    for f in upper:
        row = {}
        j = 0
        bits = f
        while bits:
            low = bits & -bits
            row[index[f ^ low]] = -1 if j % 2 else 1
            bits ^= low
            j += 1
        rows.append(row)
    return rows


def reduced_homology_dims(
    complex_: SimplicialComplex, field: FieldSpec = QQ
) -> dict[int, int]:
    """dim H~_i for i = -1 .. dim; all zeros (empty dict) for the void complex."""
    if complex_.is_void():
        return {}
    by_dim = complex_.faces_by_dim()
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        ranks[d] = rank_of_rows(boundary_rows(by_dim[d - 1], by_dim[d]), field)
    out = {}
    for d in range(-1, top + 1):
        out[d] = len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out
