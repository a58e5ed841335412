import pytest

from l21span.graph import Graph, path_graph


@pytest.fixture
def k2():
    return Graph(2, [(0, 1)])


@pytest.fixture
def p4():
    return path_graph(4)


def pytest_terminal_summary(terminalreporter):
    from _report import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title, detail = RESULTS[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
        terminalreporter.write_line(line + (f" -- {detail}" if detail else ""))
