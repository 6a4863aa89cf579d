"""Shared fixtures plus the acceptance criteria summary printer.

Tests named test_criterion_NN_* inside test_acceptance.py are grouped by
NN and reported as one PASS/FAIL line each at the end of the run, so the
acceptance gate can be read off the terminal without digging through the
normal pytest output.
"""

from __future__ import annotations

import re

import pytest

from toughgraph import petersen, unit_toughness_graph

_CRITERIA = {
    1: "building block terminal path refutations",
    2: "known toughness values from the exact oracle",
    3: "single-kind chain toughness formula, small sizes",
    4: "chain-with-tail toughness formula, small sizes",
    5: "mixed-kind toughness formula and cross-formula identity",
    6: "mixed-kind tail formula at the oracle's upper range",
    7: "path-closing tail formula, small sizes",
    8: "synth/verify round trip, exact oracle tier",
    9: "synth/verify round trip, structural tier",
    10: "triangle inflation instance: refutation and witness ratio",
    11: "property suites: plans, certificate fuzzing, graph6",
}

_PAT = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")
_results: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    m = _PAT.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    bucket = _results.setdefault(num, [])
    if report.when == "call":
        bucket.append(report.outcome)
    elif report.outcome != "passed":
        # setup errors and marker skips never reach the call phase
        bucket.append(report.outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_results):
        outcomes = _results[num]
        if all(o == "passed" for o in outcomes):
            word = "PASS"
        elif all(o in ("passed", "skipped") for o in outcomes):
            word = "SKIP"
        else:
            word = "FAIL"
        title = _CRITERIA.get(num, "?")
        terminalreporter.write_line(
            "criterion %2d: %s  %s" % (num, word, title)
        )


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()


@pytest.fixture(scope="session")
def unit_graph():
    return unit_toughness_graph()
