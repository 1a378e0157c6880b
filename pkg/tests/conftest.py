from itertools import combinations

import pytest
from hypothesis import strategies as st

from avdtc.generators import GenSpec, generate, random_support
from avdtc.graph import build_graph

# criterion id -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


@st.composite
def three_degenerate_graphs(draw, min_n=1, max_n=60, cap=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    back = draw(st.integers(min_value=0, max_value=3))
    return generate(GenSpec("random3d", n, seed, back, cap if cap >= back else 0))


@st.composite
def graphs_with_support(draw, **kw):
    g = draw(three_degenerate_graphs(**kw))
    seed = draw(st.integers(min_value=0, max_value=2**16))
    pairs = draw(st.integers(min_value=0, max_value=max(1, g.n // 2)))
    return g, random_support(g, seed, pairs)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("abcdefgh")), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")


@pytest.fixture
def record():
    def _record(key: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[key] = (ok, detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")

    return _record
