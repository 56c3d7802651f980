import pytest

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line('markers', 'acceptance: acceptance criterion (reported in the summary)')


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker('acceptance') is None:
        return
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    if report.when == 'call' or (report.when == 'setup' and not report.passed):
        _acceptance.append((title, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section('acceptance criteria')
    for title, passed in _acceptance:
        num, _, text = title.partition(' ')
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {num}: {text}")
