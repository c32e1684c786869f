import random

import pytest
from hypothesis import strategies as st

from bsotools.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=2, max_n=12):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    p = draw(st.sampled_from([0.0, 0.2, 0.5, 0.9]))
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    g = Graph(n, edges)
    assert is_connected(g)
    return g


@pytest.fixture
def rng():
    return random.Random(20240101)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test's own assertions decide PASS/FAIL."""
    record = {"name": request.node.name, "detail": ""}

    def note(name, detail=""):
        record["name"], record["detail"] = name, detail

    yield note
    failed = getattr(request.node, "rep_call", None) is None or request.node.rep_call.failed
    status = "FAIL" if failed else "PASS"
    ACCEPTANCE_LINES.append(f"[{status}] {record['name']}" + (f": {record['detail']}" if record["detail"] else ""))


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
