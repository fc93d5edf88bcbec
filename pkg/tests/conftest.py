import pytest

from hamcircuit.graph import Graph, parse_graph

K4_TEXT = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4"

# 5-cycle plus chord 3-5: smallest edge set containing the walks
# 1-2-3-4-5-1, 1-2-3-5-1 and 1-2-3-5-4-5-1.
PENTAGON_CHORD_TEXT = "5 6\n1 2\n2 3\n3 4\n4 5\n5 1\n3 5"


@pytest.fixture
def k4() -> Graph:
    return parse_graph(K4_TEXT)


@pytest.fixture
def pentagon_chord() -> Graph:
    return parse_graph(PENTAGON_CHORD_TEXT)


@pytest.fixture
def triangle() -> Graph:
    return parse_graph("3 3\n1 2\n2 3\n3 1")


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_runtest_makereport(item, call):
    label = item.get_closest_marker("criterion")
    if label and call.when == "call":
        ACCEPTANCE_RESULTS[label.args[0]] = (call.excinfo is None, label.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[cid]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid}  {title}")
