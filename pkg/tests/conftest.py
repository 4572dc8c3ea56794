import numpy as np
import pytest

# Raw series and their one-decimal normalized forms from the worked example.
RAW_T = [-7.1, -1.1, -1.3, -1.5, -1.4, -1.3, -1.0, 4.5, 9.2, 1.0, 1.2, 9.6, 6.1, 1.4, -6.4, -2.6]
RAW_T2 = [-9.9, -1.4, -1.5, -1.6, -1.6, -1.3, -1.0, -3.5, 7.1, 1.2, 1.1, 1.0, 7.9, 4.6, 4.8, 5.6]
ROUNDED_T = [-1.6, -0.4, -0.4, -0.4, -0.4, -0.4, 0.3, 0.8, 1.8, 0.1, 0.1, 1.9, 1.2, 0.2, -1.5, -0.7]
ROUNDED_T2 = [-2.4, -0.5, -0.5, -0.5, -0.5, 0.4, -0.4, -1.0, 1.4, 0.1, 0.1, 0.1, 1.6, 0.9, 0.9, 1.1]

_ACCEPTANCE = []


def record_acceptance(criterion, passed, detail=""):
    _ACCEPTANCE.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        status = {True: "PASS", False: "FAIL", None: "SKIP", "info": "INFO"}[passed]
        terminalreporter.write_line(f"[{status}] {criterion}" + (f" -- {detail}" if detail else ""))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
