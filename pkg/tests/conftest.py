import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from lcymirror.bundled import load_model, model_names
from lcymirror.sampling import random_fan, random_model

settings.register_profile("exact", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")


@pytest.fixture(scope="session")
def bundled():
    return {name: load_model(name) for name in model_names()}


@pytest.fixture
def pentagon():
    return load_model("pentagon")


@pytest.fixture
def k8():
    return load_model("k8")


seeds = st.integers(min_value=0, max_value=2**32 - 1)


def fan_from_seed(seed, max_k=10):
    return random_fan(random.Random(seed), max_k=max_k)


def model_from_seed(seed, **kw):
    return random_model(random.Random(seed), **kw)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    outcomes = getattr(mod, "OUTCOMES", None)
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(outcomes):
        terminalreporter.write_line(outcomes[n].line())
