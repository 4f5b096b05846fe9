import pytest
from hypothesis import strategies as st

from fibspecial.intpoly import IntPoly

small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, max_size=12).map(IntPoly)
vectors = st.lists(st.integers(min_value=0, max_value=30), min_size=0, max_size=8).map(tuple)
vectors012 = st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=9).map(tuple)

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion; printed at session end."""

    def record(label: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
