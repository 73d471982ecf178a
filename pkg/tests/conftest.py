import pytest
from hypothesis import strategies as st

from repgl import Bipartition, Partition

ACCEPTANCE_RESULTS = []


def partition_strategy(max_rows=4, max_part=4):
    return st.lists(st.integers(1, max_part), max_size=max_rows).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def bipartition_strategy(max_rows=4, max_part=4):
    return st.builds(Bipartition, partition_strategy(max_rows, max_part), partition_strategy(max_rows, max_part))


@pytest.fixture
def bp():
    from repgl import parse_bipartition

    return parse_bipartition


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        mark = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number}. {name}: {detail}")
