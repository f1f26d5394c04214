from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from deligne_gl.combinatorics import Bipartition, Partition

settings.register_profile(
    "repo", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

ORACLE_DELTAS = [Fraction(-2), Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)]


@st.composite
def partitions_st(draw, max_size: int = 6, max_len: int | None = None):
    n = draw(st.integers(0, max_size))
    parts = []
    cap = n
    while n > 0 and (max_len is None or len(parts) < max_len):
        p = draw(st.integers(1, min(cap, n)))
        parts.append(p)
        n -= p
        cap = p
    return Partition(parts)


@st.composite
def bipartitions_st(draw, max_black: int = 4, max_white: int = 4):
    return Bipartition(draw(partitions_st(max_black)), draw(partitions_st(max_white)))


integral_deltas = st.integers(-5, 5).map(Fraction)
deltas_st = st.one_of(integral_deltas, st.sampled_from([Fraction(1, 2), Fraction(-7, 3)]))


def bp(black=(), white=()) -> Bipartition:
    return Bipartition(Partition(black), Partition(white))


@pytest.fixture
def BP():
    return bp


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
