from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oddcycles.graph import Digraph  # noqa: E402

settings.register_profile(
    "default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 7) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return Digraph.from_edges(n, edges)


@st.composite
def digraphs_with_set(draw, min_n: int = 2, max_n: int = 6, min_size: int = 1):
    g = draw(digraphs(min_n=max(min_n, min_size), max_n=max_n))
    xs = draw(st.sets(st.integers(0, g.n - 1), min_size=min_size, max_size=g.n))
    return g, tuple(sorted(xs))


# -- acceptance summary ------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        verdict = "PASS" if report.outcome == "passed" else "FAIL"
        _criteria[number] = (verdict, f"{title} ({report.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        verdict, text = _criteria[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {text}")
