import pytest

# test_acceptance appends (criterion, passed, detail) here; printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for crit, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {crit}: {detail}")


@pytest.fixture
def s6_path():
    from importlib import resources
    return str(resources.files("roughideals").joinpath("data/s6.json"))
