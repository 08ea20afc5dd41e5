import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from emdlab.graph_core import from_edge_list  # noqa: E402

_CRITERIA: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number, ok, text):
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
        _CRITERIA.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random spanning tree plus a random subset of the remaining pairs."""
    n = draw(st.integers(min_n, max_n))
    pairs = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    rest = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in pairs]
    keep = draw(st.lists(st.booleans(), min_size=len(rest), max_size=len(rest)))
    pairs |= {p for p, k in zip(rest, keep) if k}
    return from_edge_list(n, pairs)
