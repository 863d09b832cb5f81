import pytest

from automalg import Dfa, build_factor_automaton, minimize

from corpus import AUTOMATA, CORPUS, NAMED

_criteria = {}


def factor_dfa(p):
    return minimize(build_factor_automaton(p))


@pytest.fixture
def xxyy():
    return factor_dfa(NAMED["x2y2"])


@pytest.fixture
def xx():
    return factor_dfa(NAMED["x2"])


@pytest.fixture
def yx_dfa():
    return factor_dfa(NAMED["yx"])


@pytest.fixture
def parity():
    """Two states, parity of the number of 1s; accepting set {q0}."""
    return Dfa(("0", "1"), ((0, 1), (1, 0)), 0, frozenset({0}))


def corpus_automata():
    out = {name: factor_dfa(p) for name, p in CORPUS.items()}
    out.update({name: minimize(a) for name, a in AUTOMATA.items()})
    return out


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _criteria[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[2])):
        terminalreporter.write_line(f"{_criteria[name]}  {name}")
