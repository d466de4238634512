"""Shared fixtures, substitution corpora, and the acceptance summary hook."""

from __future__ import annotations

import re

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from recplot import CaseLabel, Substitution, classify, normalize

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def tm() -> Substitution:
    return Substitution("01", "10")


@pytest.fixture(scope="session")
def pd() -> Substitution:
    return Substitution("01", "00")


@pytest.fixture(scope="session")
def q5() -> Substitution:
    return Substitution("01110", "01010")


@pytest.fixture(scope="session")
def q4() -> Substitution:
    return Substitution("0101", "0100")


@pytest.fixture(scope="session")
def runs3() -> Substitution:
    # non-primitive: runs of ones grow without bound, letter 0 vanishes
    return Substitution("010", "111")


# Deterministic primitive aperiodic corpus for exhaustive-style properties.
PRIMITIVE_CORPUS: tuple[Substitution, ...] = (
    Substitution("01", "10"),
    Substitution("01", "00"),
    Substitution("011", "010"),
    Substitution("010", "000"),
    Substitution("0110", "0111"),
    Substitution("0101", "0100"),
    Substitution("01110", "01010"),
    Substitution("01101", "10000"),
    Substitution("00101", "00111"),
)


@st.composite
def binary_substitutions(draw, min_q: int = 2, max_q: int = 5) -> Substitution:
    q = draw(st.integers(min_q, max_q))
    image0 = draw(st.text(alphabet="01", min_size=q, max_size=q))
    image1 = draw(st.text(alphabet="01", min_size=q, max_size=q))
    return Substitution(image0, image1)


@st.composite
def normalized_substitutions(draw, min_q: int = 2, max_q: int = 4) -> Substitution:
    return normalize(draw(binary_substitutions(min_q, max_q))).substitution


@st.composite
def primitive_aperiodic_substitutions(draw, min_q: int = 2, max_q: int = 4) -> Substitution:
    sub = draw(normalized_substitutions(min_q, max_q))
    assume(classify(sub).label is CaseLabel.PRIMITIVE_APERIODIC)
    return sub


_CRITERION = re.compile(r"test_c(\d+)_(\w+?)(?:\[|$)")
_outcomes: dict[tuple[int, str], bool] = {}


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    if "test_acceptance" not in report.nodeid:
        return
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    key = (int(match.group(1)), match.group(2))
    if report.when == "call":
        _outcomes[key] = report.passed and _outcomes.get(key, True)
    elif report.failed:
        _outcomes[key] = False


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, slug in sorted(_outcomes):
        verdict = "PASS" if _outcomes[(number, slug)] else "FAIL"
        terminalreporter.write_line(f"C{number} {slug.replace('_', '-')}: {verdict}")
