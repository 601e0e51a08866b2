import numpy as np
import pytest
from hypothesis import strategies as st

from fuzzyroc import make_score_set


def random_score_set(rng, n, *, shift=1.0, decimals=None):
    """Two-class Gaussian mixture; rounding to ``decimals`` creates ties."""
    n = max(int(n), 2)
    labels = rng.integers(0, 2, n)
    labels[0], labels[1] = 0, 1
    scores = rng.normal(labels * shift, 1.0)
    if decimals is not None:
        scores = np.round(scores, decimals)
    if np.unique(scores).size < 2:
        scores[1] = scores[0] + 1.0
    return make_score_set(scores, labels)


@pytest.fixture
def overlapping():
    """Class 0: 1, 2, 3, 4; class 1: 2.5, 3.5, 4.5, 5.5."""
    return make_score_set([1, 2, 3, 4, 2.5, 3.5, 4.5, 5.5], [0, 0, 0, 0, 1, 1, 1, 1])


@st.composite
def score_sets(draw, min_n=2, max_n=30, ties=True):
    n = draw(st.integers(min_n, max_n))
    if ties:
        values = st.integers(-6, 6).map(float)
    else:
        values = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
    scores = draw(st.lists(values, min_size=n, max_size=n, unique=not ties))
    labels = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    labels[0], labels[1] = 0, 1
    if len(set(scores)) < 2:
        scores[1] = scores[0] + 1.0
    return make_score_set(scores, labels)


_acceptance = []


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _acceptance.append((crit, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {crit}")
