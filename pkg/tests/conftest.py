import sys
from fractions import Fraction

import pytest
from hypothesis import reject, settings, strategies as st

from ybx.errors import DomainError
from ybx.rmatrix import TorusPoint

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

signs = st.sampled_from([1, -1])
rationals = st.builds(lambda s, p, q: Fraction(s * p, q), signs, st.integers(1, 20), st.integers(1, 20))


def points(n):
    return st.lists(rationals, min_size=n, max_size=n).map(lambda cs: TorusPoint(tuple(cs)))


@st.composite
def point_pairs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    return draw(points(n)), draw(points(n))


@st.composite
def point_triples(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return draw(points(n)), draw(points(n)), draw(points(n))


def in_domain(fn, *args):
    """Call fn; discard the example if the inputs fall outside the domain."""
    try:
        return fn(*args)
    except DomainError:
        reject()


@pytest.fixture
def running_example():
    return TorusPoint.of(1, 2), TorusPoint.of(3, 5)


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
