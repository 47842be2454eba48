"""Collects acceptance outcomes and prints one line per criterion at the end of the run."""
import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _RESULTS[number] = (title, rep.outcome, getattr(item, "elapsed_note", ""))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, outcome, note = _RESULTS[number]
        tag = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"[{tag}] criterion {number:2d}: {title}" + (f" ({note})" if note else ""))
