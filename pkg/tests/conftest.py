import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixture_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    import re

    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_", getattr(rep, "nodeid", ""))
            if m and rep.when == "call" or (m and outcome == "error"):
                lines.append((int(m.group(1)), "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    from test_acceptance import CRITERIA
    terminalreporter.section("acceptance criteria")
    for n, verdict in sorted(set(lines)):
        terminalreporter.write_line(f"criterion {n:2d} {verdict}  {CRITERIA[n]}")
