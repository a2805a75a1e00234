import pytest
from hypothesis import strategies as st

from ideal_lab.ideal import normalize


@st.composite
def ideals(draw, max_n=3, max_gens=4, max_exp=3):
    """Proper nonzero monomial ideals in at most ``max_n`` variables."""
    n = draw(st.integers(1, max_n))
    mono = st.tuples(*[st.integers(0, max_exp)] * n).filter(any)
    gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
    return normalize(gens, n)


@st.composite
def monomials(draw, n, max_exp=3):
    return draw(st.tuples(*[st.integers(0, max_exp)] * n))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
