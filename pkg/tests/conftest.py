import re

import pytest

from curvemap import DEFAULT_PRIME, Parameterization, PrimeField, parse_form

# one line per acceptance criterion, filled in by tests/test_acceptance.py and
# echoed after the run so the pass/fail verdicts are visible in plain output
ACCEPTANCE_LINES: dict = {}

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


@pytest.fixture(scope="session")
def field():
    return PrimeField(DEFAULT_PRIME)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def build(field):
    def make(*texts, f=None):
        k = f or field
        return Parameterization.build(k, [parse_form(k, t) for t in texts])

    return make


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = _CRITERION.search(rep.nodeid)
            if m:
                outcomes[int(m.group(1))] = status
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(outcomes):
        verdict = "PASS" if outcomes[num] == "passed" else "FAIL"
        detail = ACCEPTANCE_LINES.get(num, "")
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {detail}")
