import pytest

from cdawg_lab.edits import EditOp, apply_edit

EXAMPLE_T = "cabcabcdabcadbcabcdabcabdcabcabcabdabcab"
EXAMPLE_T2 = "cabcabcdabcabcabcdabcabdcabcabcabdabcab"

_criteria = {}   # criterion number -> list of outcomes
_items = {}      # nodeid -> criterion number


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _items[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    n = _items.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        _criteria.setdefault(n, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        if "failed" in outcomes:
            verdict = "FAIL"
        elif "passed" in outcomes:
            verdict = "PASS"
        else:
            verdict = "SKIP"
        terminalreporter.write_line(f"criterion {n}: {verdict}")


@pytest.fixture(scope="session")
def example_ctx():
    return apply_edit(EXAMPLE_T, EditOp("del", 13))


@pytest.fixture
def abab_ins():
    return apply_edit("abab", EditOp("ins", 3, "c"))
