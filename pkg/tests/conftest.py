import pytest

# criterion key -> (status, title); several tests may share one criterion
_CRITERIA: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    key, title = marker.args
    entry = _CRITERIA.setdefault(key, ["PASS", title])
    if rep.failed:
        entry[0] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=int):
        status, title = _CRITERIA[key]
        terminalreporter.write_line(f"[{status}] {key}. {title}")
