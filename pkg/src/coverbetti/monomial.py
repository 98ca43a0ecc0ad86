"""Monomials and monomial ideals in k[x_1, ..., x_n].

Exponent vectors are plain tuples of non-negative ints; variables are
1-indexed everywhere a human sees them (``x1`` is index 0 internally).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ParseError, StructureError

Multidegree = tuple[int, ...]


def degree_of_set(n: int, subset: Iterable[int]) -> Multidegree:
    """The 0/1 vector with ones at the (1-indexed) positions in ``subset``."""
    exps = [0] * n
    for i in subset:
        if not 1 <= i <= n:
            raise StructureError(f"variable index {i} outside 1..{n}")
        exps[i - 1] = 1
    return tuple(exps)


def support(a: Multidegree) -> frozenset[int]:
    return frozenset(i + 1 for i, e in enumerate(a) if e)


def is_squarefree(a: Multidegree) -> bool:
    return all(e in (0, 1) for e in a)


def dominates(a: Multidegree, b: Multidegree) -> bool:
    """Componentwise ``a >= b``."""
    return all(x >= y for x, y in zip(a, b))


def mask_of(a: Multidegree) -> int:
    """Bitmask of the support; bit ``i-1`` stands for ``x_i``."""
    m = 0
    for i, e in enumerate(a):
        if e:
            m |= 1 << i
    return m


def degree_of_mask(n: int, mask: int) -> Multidegree:
    return tuple((mask >> i) & 1 for i in range(n))


@dataclass(frozen=True, order=True)
class Monomial:
    exps: Multidegree

    def __post_init__(self):
        if any((not isinstance(e, int)) or e < 0 for e in self.exps):
            raise StructureError(f"exponents must be non-negative ints: {self.exps}")

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def from_set(cls, n: int, subset: Iterable[int]) -> Monomial:
        """x^A for a set A of 1-indexed variables."""
        return cls(degree_of_set(n, subset))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Monomial:
        return cls(degree_of_mask(n, mask))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        return support(self.exps)

    @property
    def mask(self) -> int:
        return mask_of(self.exps)

    def is_squarefree(self) -> bool:
        return is_squarefree(self.exps)

    def _check(self, other: Monomial) -> None:
        if len(self.exps) != len(other.exps):
            raise StructureError(
                f"ambient mismatch: {len(self.exps)} vs {len(other.exps)} variables"
            )

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return dominates(other.exps, self.exps)

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exps, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def _canonical(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    # lex order with x1 > x2 > ... : larger exponent vectors first
    return tuple(sorted(set(gens), key=lambda m: m.exps, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators, in canonical order.

    The zero ideal has no generators; the unit ideal is generated by the
    monomial 1. Construction always minimalizes, so two ideals are equal
    exactly when their dataclass values are equal.
    """

    n: int
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0:
            raise StructureError("ambient variable count must be non-negative")
        gens = tuple(self.gens)
        for g in gens:
            if g.n != self.n:
                raise StructureError(
                    f"generator {g} has {g.n} variables, ideal has {self.n}"
                )
        object.__setattr__(self, "gens", _canonical(_antichain(gens)))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, (Monomial.unit(n),))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> MonomialIdeal:
        return cls(n, tuple(Monomial.from_set(n, s) for s in sets))

    @classmethod
    def principal(cls, m: Monomial) -> MonomialIdeal:
        return cls(m.n, (m,))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def lcm_all(self) -> Monomial:
        out = Monomial.unit(self.n)
        for g in self.gens:
            out = out.lcm(g)
        return out

    def embed(self, n: int) -> MonomialIdeal:
        """Same generators in a ring with ``n >= self.n`` variables."""
        if n < self.n:
            raise StructureError(f"cannot embed {self.n} variables into {n}")
        pad = (0,) * (n - self.n)
        return MonomialIdeal(n, tuple(Monomial(g.exps + pad) for g in self.gens))

    def truncate(self, n: int) -> MonomialIdeal:
        """Drop trailing variables, which must not occur in any generator."""
        if any(any(g.exps[n:]) for g in self.gens):
            raise StructureError(f"generators use variables beyond x{n}")
        return MonomialIdeal(n, tuple(Monomial(g.exps[:n]) for g in self.gens))

    def masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g.exps) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        try:
            n = int(data["n"])
            gens = tuple(Monomial(tuple(int(e) for e in v)) for v in data["generators"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad ideal JSON: {exc}") from exc
        return cls(n, gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _antichain(gens: tuple[Monomial, ...]) -> list[Monomial]:
    uniq = sorted(set(gens), key=lambda m: m.degree)
    kept: list[Monomial] = []
    for m in uniq:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


def minimalize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generators."""
    gens = tuple(gens)
    if n is None:
        if not gens:
            raise StructureError("ambient n is required for an empty generator set")
        n = gens[0].n
    return MonomialIdeal(n, gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(g.divides(m) for g in ideal.gens)


def _same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise StructureError(f"ambient mismatch: {a.n} vs {b.n} variables")


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.n, a.gens + b.gens)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.n, tuple(g.lcm(h) for g in a.gens for h in b.gens))


def scale(m: Monomial, ideal: MonomialIdeal) -> MonomialIdeal:
    """The ideal ``m * I``."""
    if m.n != ideal.n:
        raise StructureError(f"ambient mismatch: {m.n} vs {ideal.n} variables")
    return MonomialIdeal(ideal.n, tuple(m * g for g in ideal.gens))


def sum_all(n: int, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    gens: list[Monomial] = []
    for ideal in ideals:
        if ideal.n != n:
            raise StructureError(f"ambient mismatch: {ideal.n} vs {n} variables")
        gens.extend(ideal.gens)
    return MonomialIdeal(n, tuple(gens))


_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    exps = [0] * n
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        match = _VAR.match(factor.strip())
        if not match:
            raise ParseError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(match.group(2) or 1)
    return Monomial(tuple(exps))


def parse_ideal(spec: str) -> MonomialIdeal:
    """Parse ``I = x1*x2, x2*x3 @ n=3``; the ``I =`` prefix is optional.

    An empty generator list (``@ n=3`` alone) gives the zero ideal.
    """
    if "@" not in spec:
        raise ParseError("ideal spec needs an explicit ambient size, e.g. '@ n=3'")
    body, _, tail = spec.rpartition("@")
    match = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*", tail)
    if not match:
        raise ParseError(f"cannot parse ambient size {tail.strip()!r}")
    n = int(match.group(1))
    body = body.strip()
    if "=" in body:
        body = body.split("=", 1)[1]
    body = body.strip().strip("()")
    terms = [t for t in (s.strip() for s in body.split(",")) if t]
    return MonomialIdeal(n, tuple(parse_monomial(t, n) for t in terms))
