from functools import lru_cache

import pytest
from hypothesis import strategies as st

from contracta.generation import iter_leaves
from contracta.graph import from_edges


@st.composite
def graphs(draw, min_n=0, max_n=8, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if density is None:
        picked = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        picked = [draw(st.floats(0, 1)) < density for _ in pairs]
    return from_edges(n, [p for p, keep in zip(pairs, picked) if keep])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))


@lru_cache(maxsize=None)
def leaves_up_to(n_max):
    return tuple(iter_leaves(4, n_max))


@pytest.fixture(scope="session")
def three_connected_up_to_7():
    return [leaf.graph() for leaf in leaves_up_to(7)]


# acceptance summary lines, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
