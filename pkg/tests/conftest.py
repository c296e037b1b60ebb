from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from planecover.geometry import Point

settings.register_profile("default", deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def small_fractions(lo=-20, hi=20, max_den=4):
    return st.builds(Fraction, st.integers(lo * max_den, hi * max_den),
                     st.integers(1, max_den))


def points(lo=-20, hi=20, max_den=4):
    return st.builds(Point, small_fractions(lo, hi, max_den), small_fractions(lo, hi, max_den))


def P(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


@pytest.fixture
def nine_dot():
    return [P(x, y) for y in range(3) for x in range(3)]


# one verdict line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
