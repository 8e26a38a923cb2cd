from __future__ import annotations

import time

import pytest

_ACCEPTANCE: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title, budget): acceptance criterion with a runtime bound in seconds")


@pytest.fixture
def stopwatch(request):
    """Times the block it wraps and records the elapsed seconds on the test item."""

    class Stopwatch:
        elapsed = None

        def __enter__(self):
            self._start = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.perf_counter() - self._start
            request.node.user_properties.append(("elapsed", self.elapsed))
            return False

    return Stopwatch()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (report.when != "call" and report.passed):
        return
    number, title, budget = marker.args
    entry = _ACCEPTANCE.setdefault(number, {"title": title, "budget": budget, "passed": True, "elapsed": None})
    entry["passed"] = entry["passed"] and report.passed
    entry["elapsed"] = dict(item.user_properties).get("elapsed", entry["elapsed"])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[number]
        status = "PASS" if e["passed"] else "FAIL"
        timing = f"{e['elapsed']:.2f} s" if e["elapsed"] is not None else "n/a"
        terminalreporter.write_line(f"criterion {number} {e['title']}: {status} ({timing}, bound {e['budget']} s)")
