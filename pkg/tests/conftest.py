import functools

import pytest

from dihedral_quandles.algebra import DihedralGroup, conjugation_quandle


@functools.lru_cache(maxsize=None)
def conj(n: int):
    return conjugation_quandle(DihedralGroup(n))


@pytest.fixture
def conj_q():
    return conj


_acceptance: dict[str, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = (report.outcome, report.longrepr and str(report.longrepr).splitlines()[-1])
    elif "test_acceptance.py::" in report.nodeid and report.failed:
        _acceptance[report.nodeid] = (report.outcome, str(report.longrepr).splitlines()[-1])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (outcome, why) in _acceptance.items():
        name = nodeid.split("::")[-1]
        line = f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}"
        if outcome != "passed" and why:
            line += f"  -- {why[:160]}"
        terminalreporter.write_line(line)
