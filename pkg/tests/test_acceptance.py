"""The thirteen acceptance criteria, one test each, at zero tolerance.

Each test prints a single PASS/FAIL line with the measured quantities.
"""
import pytest

from lcymirror.acceptance import CRITERIA, _run_one

# collected for the terminal summary in conftest.py
OUTCOMES = {}


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    outcome = _run_one(number - 1)
    OUTCOMES[number] = outcome
    print("\n" + outcome.line())
    assert outcome.passed, outcome.line()
