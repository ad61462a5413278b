import functools
import itertools
from pathlib import Path

import pytest
from hypothesis import strategies as st

from dompoly.graph import Graph
from dompoly.search import enumerate_graphs, extend_corpus, ingest_graph6, write_graph6

DATA = Path(__file__).resolve().parent.parent / "data"


@functools.lru_cache(maxsize=None)
def exhaustive_corpus(n):
    """Every graph of order n up to isomorphism (n <= 8)."""
    if n <= 7:
        return tuple(enumerate_graphs(n))
    assert n == 8
    path = DATA / "graphs8.g6"
    if not path.exists():
        DATA.mkdir(exist_ok=True)
        write_graph6(extend_corpus(enumerate_graphs(7)), path)
    return tuple(ingest_graph6(path))


@pytest.fixture(scope="session")
def corpus():
    return exhaustive_corpus


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def relabelings(draw, g):
    return draw(st.permutations(list(range(g.n))))


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


ACCEPTANCE_LINES = []


def record_criterion(number, title, passed, detail=""):
    line = f"{'PASS' if passed else 'FAIL'} criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    return passed


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
