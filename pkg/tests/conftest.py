import re

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from skeinlab.laurent import LaurentPoly
from skeinlab.polyx import PolyX

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def laurent(max_terms=5, exp=8, coeff=9, nonneg=False):
    lo = 0 if nonneg else -coeff
    return st.dictionaries(
        st.integers(-exp, exp), st.integers(lo, coeff), max_size=max_terms
    ).map(LaurentPoly)


def polyx(max_degree=6, **kw):
    return st.lists(laurent(max_terms=3, **kw), max_size=max_degree + 1).map(PolyX)


# -- one PASS/FAIL line per acceptance criterion ---------------------------

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, bool] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance.py" not in report.nodeid:
        return
    num = int(m.group(1))
    failed = report.failed or (report.when == "call" and report.skipped)
    _outcomes[num] = _outcomes.get(num, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_outcomes):
        verdict = "PASS" if _outcomes[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}")


@pytest.fixture
def cli_env(monkeypatch):
    monkeypatch.delenv("SKEINLAB_MAX_DEGREE", raising=False)
    return monkeypatch
