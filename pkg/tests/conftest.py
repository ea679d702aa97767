import pytest

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, label): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _acceptance.append((marker.args[0], item.callspec.id if hasattr(item, "callspec") else "",
                            marker.args[1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for n, case, label, passed in sorted(_acceptance, key=lambda r: (r[0], r[1])):
        tag = f" [{case}]" if case else ""
        terminalreporter.write_line(f"criterion {n}{tag}: {'PASS' if passed else 'FAIL'} - {label}")
