"""Shared fixtures plus a terminal summary for the acceptance suite.

Every test in test_acceptance.py covers one numbered criterion; the summary
hook prints a single PASS/FAIL line per criterion so the gate can be read
off the bottom of the run.
"""

import pytest

from bipfs import BiGraph, complete_host, cycle_host, make_bigraph


@pytest.fixture(scope="session")
def k33() -> BiGraph:
    return complete_host(3)


@pytest.fixture(scope="session")
def c6() -> BiGraph:
    return cycle_host(3)


@pytest.fixture(scope="session")
def k44() -> BiGraph:
    return complete_host(4)


@pytest.fixture(scope="session")
def path10() -> BiGraph:
    # spanning path 0-5-1-6-2-7-3-8-4-9 inside K_{5,5}
    order = [0, 5, 1, 6, 2, 7, 3, 8, 4, 9]
    return make_bigraph(5, list(zip(order, order[1:])))


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in tr.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "::" in nodeid:
                rows.append((nodeid.split("::")[-1], outcome))
    if not rows:
        return
    tr.write_sep("-", "acceptance criteria")
    for name, outcome in sorted(set(rows)):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        tr.write_line(f"{name}: {verdict}")
