import pytest

_RESULTS: dict[int, tuple[str, str, float | None]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        elapsed = getattr(item, "criterion_elapsed", None)
        _RESULTS[number] = ("PASS" if rep.passed else "FAIL", title, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        verdict, title, elapsed = _RESULTS[number]
        t = "" if elapsed is None else f" ({elapsed:.2f} s)"
        terminalreporter.write_line(f"{verdict} criterion {number}: {title}{t}")
