import pytest

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    label, text = mark.args
    if rep.when == "setup" and rep.passed:
        return
    if hasattr(rep, "wasxfail"):
        status = "XFAIL (expected, see ledger)"
    elif rep.skipped:
        status = "EXCLUDED"
    else:
        status = "PASS" if rep.passed else "FAIL"
    _criteria[label] = (status, text)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: (int(s.rstrip("abc")), s)):
        status, text = _criteria[label]
        terminalreporter.write_line(f"criterion {label:<3} {status:<8}  {text}")
