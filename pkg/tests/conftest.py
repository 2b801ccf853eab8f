import numpy as np
import pytest

ACCEPTANCE = []


@pytest.fixture
def record():
    """Record one acceptance line: ``record(number, passed, detail)``."""

    def _record(number, passed, detail):
        ACCEPTANCE.append((number, bool(passed), detail))
        return passed

    return _record


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {number}: {detail}")
