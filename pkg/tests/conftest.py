import random
import sys

import pytest
from hypothesis import settings, strategies as st

from symgenera.graded import GradedDims
from symgenera.laurent import YXZ, LaurentPoly
from symgenera.parse import parse_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

exponent = st.integers(-2, 2)
monomial = st.tuples(exponent, exponent, exponent)


@st.composite
def laurent_polys(draw, max_terms=5, coeffs=st.integers(-3, 3)):
    terms = draw(st.dictionaries(monomial, coeffs, max_size=max_terms))
    return LaurentPoly(YXZ, terms)


@st.composite
def graded_dims(draw, max_dim=3, k_range=(-3, 3)):
    total = draw(st.integers(1, max_dim))
    dims = {}
    for _ in range(total):
        deg = (draw(st.integers(-2, 2)), draw(st.integers(-2, 2)), draw(st.integers(*k_range)))
        dims[deg] = dims.get(deg, 0) + 1
    return GradedDims(dims)


@pytest.fixture
def yxz():
    return YXZ.gens()


@pytest.fixture
def P1_dims():
    return GradedDims({(0, 0, 0): 1, (1, 1, 2): 1})


@pytest.fixture
def odd_line():
    return GradedDims({(0, 1, 1): 1})


@pytest.fixture
def elliptic():
    return parse_poly("1 - y*z - x*z + y*x*z^2")


def random_laurent(rng: random.Random, max_terms=5, lo=-3, hi=3, exp_range=2) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(-exp_range, exp_range) for _ in range(3))
        terms[e] = rng.randint(lo, hi)
    return LaurentPoly(YXZ, terms)


def random_graded(rng: random.Random, max_dim=4, pq=(-2, 2), k=(-3, 3)) -> GradedDims:
    dims = {}
    for _ in range(rng.randint(1, max_dim)):
        deg = (rng.randint(*pq), rng.randint(*pq), rng.randint(*k))
        dims[deg] = dims.get(deg, 0) + 1
    return GradedDims(dims)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
