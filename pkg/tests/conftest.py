import numpy as np
import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20261014)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion (printed in the terminal summary)."""

    class Recorder:
        def __init__(self):
            self.label = None
            self.detail = ""

        def __call__(self, label, detail=""):
            self.label = label
            self.detail = detail

    return Recorder()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    rec = item.funcargs.get("criterion") if hasattr(item, "funcargs") else None
    if rec is not None and rec.label is not None:
        status = "PASS" if report.passed else "FAIL"
        _ACCEPTANCE_LINES.append(f"{status}  {rec.label}" + (f"  [{rec.detail}]" if rec.detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
