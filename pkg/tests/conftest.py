import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from relnerve.fincat import cyclic_group, interval, parallel_pair, walking_isomorphism, walking_retract
from relnerve.generators import random_category

settings.register_profile("repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

SEED = 20240611


def categories(max_objects=4):
    """Small random categories, driven by an integer seed so failures replay."""
    return st.integers(0, 2**32 - 1).map(lambda s: random_category(random.Random(s), max_objects=max_objects))


@pytest.fixture
def zoo():
    return {
        "[1]": interval(1),
        "[2]": interval(2),
        "iso": walking_isomorphism(),
        "Z2": cyclic_group(2),
        "Z3": cyclic_group(3),
        "retract": walking_retract(),
        "pair": parallel_pair(),
    }


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
