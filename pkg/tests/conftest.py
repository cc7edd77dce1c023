from fractions import Fraction

import pytest
from hypothesis import strategies as st

from umbral_mix import families
from umbral_mix.exact_series import TruncatedSeries

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=6),
)


@st.composite
def series(draw, cap=None, min_cap=0, max_cap=12, order=None):
    if cap is None:
        cap = draw(st.integers(min_value=min_cap, max_value=max_cap))
    cs = draw(st.lists(small_fractions, min_size=cap + 1, max_size=cap + 1))
    if order is not None:
        cs[:order] = [Fraction(0)] * order
        if order <= cap and cs[order] == 0:
            cs[order] = Fraction(1)
    return TruncatedSeries(cs, cap)


@pytest.fixture
def fresh_caches():
    families.clear_caches()
    yield
    families.clear_caches()


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
