import random
import sys

import pytest
from hypothesis import strategies as st

from treebounds.enumeration import prufer_to_tree
from treebounds.graph import Tree


def relabel(t: Tree, perm) -> Tree:
    return Tree.from_edges([(perm[u], perm[v]) for u, v in t.edges], order=t.order)


@st.composite
def labelled_trees(draw, min_n=2, max_n=14):
    n = draw(st.integers(min_n, max_n))
    if n == 2:
        return Tree.from_edges([(0, 1)])
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_to_tree(seq, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
