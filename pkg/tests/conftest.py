import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symres.poly import SymPoly
from symres.ring import Gaussian

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("SYMRES_HYPOTHESIS", "default"))

small_ints = st.integers(-9, 9)
gaussians = st.builds(Gaussian, small_ints, small_ints)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
coeffs = st.one_of(small_ints, gaussians)


@st.composite
def polys(draw, min_degree=0, max_degree=8, elements=small_ints):
    d = draw(st.integers(min_degree, max_degree))
    cs = draw(st.lists(elements, min_size=d + 1, max_size=d + 1))
    return SymPoly(cs, d)


@st.composite
def pairs(draw, max_degree=7, gaussian=None):
    """(A, B): A of exact degree d with A(0) != 0, B at formal degree d."""
    if gaussian is None:
        gaussian = draw(st.booleans())
    el = gaussians if gaussian else small_ints
    d = draw(st.integers(1, max_degree))
    a = draw(st.lists(el, min_size=d + 1, max_size=d + 1))
    nz = el.filter(bool)
    a[0] = a[0] or draw(nz)
    a[d] = a[d] or draw(nz)
    b = draw(st.lists(el, min_size=d + 1, max_size=d + 1))
    return SymPoly(a), SymPoly(b, d)


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
