from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from coverbetti.graph import SimpleGraph
from coverbetti.monomial import MonomialIdeal

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# five-vertex bipartite graph with sides {1,2,3} and {4,5}
EXAMPLE_EDGES = [(1, 4), (2, 4), (2, 5), (3, 5)]


@pytest.fixture
def example_graph() -> SimpleGraph:
    return SimpleGraph(5, EXAMPLE_EDGES)


def sq(n: int, *sets) -> MonomialIdeal:
    """Squarefree ideal from generator supports."""
    return MonomialIdeal.from_sets(n, sets)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return SimpleGraph(n, chosen)


@st.composite
def squarefree_ideals(draw, max_n=6, max_gens=5):
    n = draw(st.integers(1, max_n))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens))
    return MonomialIdeal.from_sets(
        n, [[i + 1 for i in range(n) if m >> i & 1] for m in masks]
    )


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance")
    for line in mod.RESULTS.values():
        terminalreporter.write_line(line)
