import pytest
from hypothesis import settings

# timings vary too much on shared machines for per-example deadlines
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, text = marker
    entry = _criteria.setdefault(number, {"text": text, "ok": True})
    if report.failed or (report.when == "call" and report.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {entry['text']}")
