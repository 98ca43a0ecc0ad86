import json
import random

import pytest
from hypothesis import given, strategies as st

from coverbetti.betti import betti_table
from coverbetti.cover_ideals import BipartiteContext, cover_ideal, j_lower
from coverbetti.enumeration import random_graph
from coverbetti.errors import PreconditionError
from coverbetti.graph import SimpleGraph, parse_graph, path_graph, star_graph
from coverbetti.linalg import QQ, FieldSpec
from coverbetti.splitting import SplitWitness, is_betti_splitting, x_partition
from coverbetti.verify import (
    VerificationReport,
    counterexample_search,
    meet_sum,
    transfer_pairs,
    verify_bipartite_meet,
    verify_bipartite_sweep,
    verify_bipartite_transfer,
    verify_cover_facts,
    verify_leaf_recursion,
    verify_lower_agreement,
    verify_lower_vanishing,
    verify_meet_formula,
    verify_neighbour_splitting,
    verify_restricted_meet,
    verify_search,
    verify_split_ideals,
)

from conftest import FIXTURES, graphs, sq


def test_report_pass_tracks_violations():
    r = VerificationReport("demo", {"n": 1})
    assert r.passed
    r.fail("here", 1, 2)
    assert not r.passed
    d = r.to_dict()
    assert d["pass"] is False and d["violations"] == [{"position": "here", "expected": 1, "actual": 2}]
    assert "seconds" not in d
    assert "seconds" in r.to_dict(timing=True)


def test_neighbour_splitting_example(example_graph):
    r = verify_neighbour_splitting(example_graph, 4)
    assert r.passed
    assert r.witnesses == [
        {"case": 1, "i": 2, "a": [1, 1, 1, 1, 1], "value": 1},
        {"case": 2, "i": 1, "a": [0, 1, 1, 1, 1], "value": 1},
        {"case": 3, "i": 1, "a": [1, 1, 1, 0, 1], "value": 1},
    ]
    meet = meet_sum(example_graph, {1, 2})
    assert meet == sq(5, {1, 2, 3, 4}, {1, 2, 4, 5})
    assert betti_table(meet).get(1, (1, 1, 1, 1, 1)) == 1


def test_neighbour_splitting_needs_independent_neighbourhood():
    triangle = SimpleGraph(3, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(PreconditionError):
        verify_neighbour_splitting(triangle, 1)


def test_bipartite_sweep(example_graph):
    assert verify_bipartite_sweep(example_graph).passed
    assert verify_bipartite_sweep(SimpleGraph(2, [(1, 2)])).passed
    with pytest.raises(PreconditionError):
        verify_bipartite_sweep(SimpleGraph(3, [(1, 2), (2, 3), (1, 3)]))


def test_lower_vanishing_examples(example_graph):
    assert verify_lower_vanishing(example_graph, {4, 5}).passed
    assert verify_lower_vanishing(example_graph, set()).passed
    with pytest.raises(PreconditionError):
        verify_lower_vanishing(example_graph, {2, 4})


def test_lower_agreement_examples(example_graph):
    lower = betti_table(j_lower(example_graph, {4, 5}))
    whole = betti_table(cover_ideal(example_graph))
    assert lower.get(1, (1, 1, 1, 0, 1)) == whole.get(1, (1, 1, 1, 0, 1)) == 1
    assert lower.get(0, (1, 1, 1, 0, 0)) == whole.get(0, (1, 1, 1, 0, 0)) == 1
    assert verify_lower_agreement(example_graph, {4, 5}).passed
    with pytest.raises(PreconditionError):
        verify_lower_agreement(example_graph, set())


def test_transfer_example(example_graph):
    ctx = BipartiteContext.of(example_graph, "R")
    assert ctx.left == frozenset({4, 5})
    r = verify_bipartite_transfer(ctx)
    assert r.passed
    pairs = {(i, a[:3]): (lhs, rhs) for i, a, lhs, rhs in transfer_pairs(ctx)}
    assert pairs[(2, (1, 1, 1))] == (1, 1)
    assert pairs[(1, (1, 1, 0))] == (1, 1)
    assert pairs[(1, (1, 1, 1))] == (0, 0)
    assert all(lhs == rhs for lhs, rhs in pairs.values())


def test_transfer_rejects_isolated_vertex():
    g = SimpleGraph(4, [(1, 3)])
    ctx = BipartiteContext(g, frozenset({1, 2}), frozenset({3, 4}))
    with pytest.raises(PreconditionError):
        verify_bipartite_transfer(ctx)


def test_ideal_level_verifiers(example_graph):
    assert verify_cover_facts(example_graph).passed
    for v in example_graph.vertices:
        assert verify_split_ideals(example_graph, v).passed
    assert verify_restricted_meet(example_graph, {4, 5}).passed
    assert verify_meet_formula(example_graph, {1, 2}).passed
    assert verify_bipartite_meet(BipartiteContext.of(example_graph, "R")).passed
    assert verify_bipartite_meet(BipartiteContext.of(example_graph, "L")).passed
    with pytest.raises(PreconditionError):
        verify_restricted_meet(example_graph, {1, 4})
    with pytest.raises(PreconditionError):
        verify_meet_formula(example_graph, set())


@pytest.mark.parametrize(
    "graph, v",
    [
        (parse_graph((FIXTURES / "example.graph").read_text()), 1),
        (parse_graph((FIXTURES / "example.graph").read_text()), 3),
        (path_graph(3), 1),
        (star_graph(4), 2),
        (star_graph(4), 4),
    ],
)
def test_leaf_recursion_examples(graph, v):
    assert verify_leaf_recursion(graph, v).passed


def test_leaf_recursion_path_closed_form():
    assert cover_ideal(path_graph(3)) == sq(3, {2}, {1, 3})


def test_leaf_recursion_rejects_non_leaf(example_graph):
    with pytest.raises(PreconditionError):
        verify_leaf_recursion(example_graph, 4)


@given(graphs(1, 6), st.sampled_from([QQ, FieldSpec(2)]))
def test_neighbour_splitting_random(graph, field_):
    for v in graph.vertices:
        if graph.is_independent(graph.neighbourhood(v)):
            assert verify_neighbour_splitting(graph, v, field_).passed


def test_search_below_threshold_finds_nothing():
    assert counterexample_search(4) is None
    r = verify_search(4)
    assert not r.passed
    assert "none found" in r.render()


def test_search_matches_fixtures():
    pinned = json.loads((FIXTURES / "counterexamples.json").read_text())
    hit = counterexample_search(7)
    assert hit is not None
    assert hit.to_dict() == {k: v for k, v in pinned["first"].items() if k != "search"}
    assert hit.witness == SplitWitness(1, 5, 0, 1)
    assert not hit.graph.is_independent(hit.graph.neighbourhood(hit.vertex))
    assert not hit.graph.is_bipartite()
    assert hit.graph == parse_graph((FIXTURES / "counterexample_first.graph").read_text())

    sig = counterexample_search(7, signature=(1, 6))
    assert sig.to_dict() == {k: v for k, v in pinned["signature_1_6"].items() if k != "search"}
    assert sig.graded["upper"] == 1 and sig.graded["J"] == 0


def test_search_hit_is_field_independent():
    a = counterexample_search(6, QQ)
    b = counterexample_search(6, FieldSpec(2))
    assert a.to_dict() == b.to_dict()


def test_search_parallel_is_deterministic():
    assert counterexample_search(6, workers=2).to_dict() == counterexample_search(6).to_dict()


def test_bipartite_pairs_never_fail():
    rng = random.Random(11)
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randint(2, 7), 0.4)
        if not g.is_bipartite():
            continue
        checked += 1
        whole = cover_ideal(g)
        assert all(is_betti_splitting(x_partition(whole, v)) for v in g.vertices)
