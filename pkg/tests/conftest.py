from pathlib import Path

import pytest

from _graphs import fig1

DATA = Path(__file__).parent / "data"


@pytest.fixture
def fig1_graph():
    return fig1()


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
