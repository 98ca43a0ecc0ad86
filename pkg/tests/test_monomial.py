import itertools

import pytest
from hypothesis import given, strategies as st

from coverbetti.errors import ParseError, StructureError
from coverbetti.monomial import (
    Monomial,
    MonomialIdeal,
    contains,
    degree_of_set,
    ideal_sum,
    intersect,
    minimalize,
    parse_ideal,
    scale,
    support,
)

from conftest import sq, squarefree_ideals


def mono(n, *vs):
    return Monomial.from_set(n, vs)


def test_multidegree_set_roundtrip():
    a = degree_of_set(6, {1, 4, 6})
    assert a == (1, 0, 0, 1, 0, 1)
    assert support(a) == {1, 4, 6}
    assert Monomial.from_mask(6, mono(6, 1, 4, 6).mask) == mono(6, 1, 4, 6)


def test_minimalize_absorbs_multiples():
    assert minimalize([mono(3, 1, 2), mono(3, 1, 2, 3)]) == sq(3, {1, 2})


def test_minimalize_keeps_antichain():
    gens = [mono(5, 1, 2, 3), mono(5, 4, 5), mono(5, 1, 2, 5), mono(5, 2, 3, 4)]
    ideal = minimalize(gens)
    assert set(ideal.gens) == set(gens)


def test_minimalize_empty_is_zero():
    assert minimalize([], n=4).is_zero()


def test_minimalize_rejects_mixed_rings():
    with pytest.raises(StructureError):
        minimalize([mono(3, 1), mono(4, 1)])


def test_contains():
    assert contains(sq(3, {1, 2}), mono(3, 1, 2, 3))
    assert not contains(MonomialIdeal.zero(3), mono(3, 1))
    cover = sq(5, {1, 2, 3}, {4, 5}, {1, 2, 5}, {2, 3, 4})
    assert mono(5, 1, 2, 4, 5) in cover


def test_sum():
    assert ideal_sum(sq(2, {1}), sq(2, {2})) == sq(2, {1}, {2})
    assert ideal_sum(sq(2, {1, 2}), sq(2, {1})) == sq(2, {1})


def test_sum_of_restricted_ideals():
    # covers of the 5-vertex example avoiding 4, plus those avoiding 5
    avoid4 = sq(5, {1, 2, 3}, {1, 2, 5})
    avoid5 = sq(5, {1, 2, 3}, {2, 3, 4})
    assert avoid4 + avoid5 == sq(5, {1, 2, 3}, {1, 2, 5}, {2, 3, 4})


def test_intersect():
    assert intersect(sq(2, {1}), sq(2, {2})) == sq(2, {1, 2})
    upper = sq(5, {4, 5}, {2, 3, 4})
    lower = sq(5, {1, 2, 3}, {1, 2, 5})
    assert intersect(upper, lower) == sq(5, {1, 2, 3, 4}, {1, 2, 4, 5})
    i = sq(4, {1, 2}, {3})
    assert intersect(i, i) == i


def test_scale():
    x4 = mono(5, 4)
    assert scale(x4, sq(5, {5}, {2, 3})) == sq(5, {4, 5}, {2, 3, 4})
    i = sq(3, {1}, {2, 3})
    assert scale(Monomial.unit(3), i) == i
    assert scale(mono(3, 1, 2), MonomialIdeal.unit(3)) == sq(3, {1, 2})


def test_unit_and_zero_are_distinct():
    assert MonomialIdeal.unit(3) != MonomialIdeal.zero(3)
    assert MonomialIdeal.unit(3).is_unit()
    assert str(MonomialIdeal.zero(2)) == "(0)"
    assert str(MonomialIdeal.unit(2)) == "(1)"


def test_rendering_and_json():
    ideal = sq(5, {4, 5}, {1, 2, 3}, {2, 3, 4}, {1, 2, 5})
    assert str(ideal) == "(x1*x2*x3, x1*x2*x5, x2*x3*x4, x4*x5)"
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal
    assert str(Monomial((2, 0, 1))) == "x1^2*x3"


def test_parse_inline():
    assert parse_ideal("I = x1*x2, x2*x3 @ n=3") == sq(3, {1, 2}, {2, 3})
    assert parse_ideal("x1^2*x2 @ n=2") == MonomialIdeal(2, (Monomial((2, 1)),))
    assert parse_ideal("@ n=2").is_zero()
    with pytest.raises(ParseError):
        parse_ideal("x1*x2")
    with pytest.raises(ParseError):
        parse_ideal("x1*x9 @ n=3")


def test_embed_truncate():
    m = sq(3, {1, 2})
    assert m.embed(5).truncate(3) == m
    with pytest.raises(StructureError):
        sq(4, {4}).truncate(3)


def _all_squarefree(n):
    for k in range(1 << n):
        yield Monomial.from_mask(n, k)


@st.composite
def ideal_pairs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    gen = st.lists(st.integers(0, (1 << n) - 1), min_size=0, max_size=5)
    make = lambda ms: MonomialIdeal(n, tuple(Monomial.from_mask(n, m) for m in ms))
    return make(draw(gen)), make(draw(gen)), make(draw(gen))


@given(ideal_pairs())
def test_intersection_matches_membership(triple):
    a, b, _ = triple
    meet = intersect(a, b)
    for g in meet.gens:
        assert g in a and g in b
    # squarefree ideals are determined by their squarefree members
    for m in _all_squarefree(a.n):
        assert (m in meet) == (m in a and m in b)


@given(ideal_pairs())
def test_sum_matches_membership(triple):
    a, b, _ = triple
    s = a + b
    for m in _all_squarefree(a.n):
        assert (m in s) == (m in a or m in b)


@given(ideal_pairs())
def test_algebraic_laws(triple):
    a, b, c = triple
    assert minimalize(a.gens, a.n) == a
    assert a + b == b + a and (a + b) + c == a + (b + c)
    assert (a & b) == (b & a) and ((a & b) & c) == (a & (b & c))


@given(ideal_pairs(), st.integers(0, 255))
def test_scale_distributes_over_intersection(triple, mask):
    a, b, _ = triple
    m = Monomial.from_mask(a.n, mask % (1 << a.n))
    assert scale(m, a & b) == scale(m, a) & scale(m, b)


@given(squarefree_ideals())
def test_generators_form_antichain(ideal):
    for g, h in itertools.permutations(ideal.gens, 2):
        assert not g.divides(h)
    assert list(ideal.gens) == sorted(ideal.gens, key=lambda m: m.exps, reverse=True)
