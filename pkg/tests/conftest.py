import time

import pytest
from hypothesis import settings

settings.register_profile("pinned", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("pinned")

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n = mark.args[0]
    ok, secs = _results.get(n, (True, 0.0))
    _results[n] = (ok and rep.passed, secs + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        ok, secs = _results[n]
        terminalreporter.write_line(f"AC{n}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s)")


@pytest.fixture
def stopwatch():
    """Yield a callable returning seconds since the test body started."""
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
