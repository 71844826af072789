from fractions import Fraction

import pytest

from hypermorse.hypercore import Hypergraph
from hypermorse.morse import MorseFunction

# ---------------------------------------------------------------------------
# fixtures for the worked examples used throughout the suite

V4 = ["v0", "v1", "v2", "v3"]


@pytest.fixture
def h_section6():
    return Hypergraph.from_labels(
        V4,
        [["v0"], ["v1"], ["v2"], ["v3"], ["v0", "v1"], ["v0", "v3"], ["v1", "v3"], ["v0", "v1", "v2"]],
    )


SECTION6_FBAR = {
    (0,): Fraction(1),
    (1,): Fraction(0),
    (2,): Fraction(0),
    (3,): Fraction(0),
    (0, 1): Fraction(1),
    (1, 2): Fraction(1),
    (1, 3): Fraction(1),
    (0, 2): Fraction(2),
    (0, 3): Fraction(2),
    (0, 1, 2): Fraction(2),
}


@pytest.fixture
def fbar_section6(h_section6):
    from hypermorse.hypercore import delta_closure

    return MorseFunction(delta_closure(h_section6), dict(SECTION6_FBAR))


@pytest.fixture
def h_224():
    return Hypergraph.from_labels(V4, [["v0", "v1", "v2", "v3"], ["v0"]])


@pytest.fixture
def hp_224():
    return Hypergraph.from_labels(
        V4,
        [
            ["v0", "v1", "v2", "v3"],
            ["v0", "v1"],
            ["v0", "v2"],
            ["v0", "v3"],
            ["v1", "v2"],
            ["v1", "v3"],
            ["v2", "v3"],
            ["v0"],
        ],
    )


V6 = ["v0", "v1", "v2", "v3", "v4", "v5"]
T225 = [["v0"], ["v1"], ["v2"], ["v3"], ["v4"], ["v5"]]


@pytest.fixture
def h_225():
    return Hypergraph.from_labels(
        V6, T225 + [["v0", "v1", "v3"], ["v1", "v2", "v4"], ["v3", "v4", "v5"]]
    )


@pytest.fixture
def hp_225():
    return Hypergraph.from_labels(
        V6,
        T225
        + [["v0", "v1", "v3"], ["v1", "v2", "v4"], ["v1", "v3", "v4"], ["v3", "v4", "v5"]],
    )


@pytest.fixture
def h_226():
    return Hypergraph.from_labels(["v0", "v1", "v2"], [["v0", "v1"], ["v1", "v2"], ["v0", "v2"]])


@pytest.fixture
def hp_226():
    return Hypergraph.from_labels(
        ["v0", "v1", "v2"],
        [["v0", "v1"], ["v1", "v2"], ["v0", "v2"], ["v0", "v1", "v2"]],
    )


@pytest.fixture
def f_311():
    h = Hypergraph.from_labels(["v0", "v1", "v2"], [["v0"], ["v0", "v1"], ["v0", "v1", "v2"]])
    return MorseFunction(h, {(0,): Fraction(2), (0, 1): Fraction(1), (0, 1, 2): Fraction(0)})


@pytest.fixture
def f_315():
    h = Hypergraph.from_labels(
        ["v0", "v1", "v2"], [["v0"], ["v1"], ["v2"], ["v0", "v1", "v2"]]
    )
    return MorseFunction(
        h,
        {(0,): Fraction(2), (1,): Fraction(2), (2,): Fraction(2), (0, 1, 2): Fraction(0)},
    )


# ---------------------------------------------------------------------------
# one pass/fail line per acceptance criterion in the terminal summary

_acceptance_outcomes = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if hasattr(report, "wasxfail"):
        outcome = "XFAIL (documented discrepancy)" if report.skipped else "XPASS"
    else:
        outcome = "PASS" if report.passed else "FAIL"
    _acceptance_outcomes.append((name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, outcome in _acceptance_outcomes:
        terminalreporter.write_line("%-60s %s" % (name, outcome))
