import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from phialgebra.algebra import make_phi_algebra  # noqa: E402
from phialgebra.exactnum import GaussianRational  # noqa: E402

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gaussian = st.builds(GaussianRational, small_fractions, small_fractions)
real_gaussian = st.builds(GaussianRational, small_fractions)


def vectors(n, elements=gaussian):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


@st.composite
def phis(draw, min_dim=1, max_dim=5):
    n = draw(st.integers(min_dim, max_dim))
    phi = draw(vectors(n).filter(any))
    return phi


def rand_gr(rng: random.Random, complex_part: bool = True) -> GaussianRational:
    re = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
    im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) if complex_part else 0
    return GaussianRational(re, im)


def rand_vec(rng: random.Random, n: int, complex_part: bool = True) -> tuple:
    return tuple(rand_gr(rng, complex_part) for _ in range(n))


def coordinate_phi(n: int):
    return [1] + [0] * (n - 1)


@pytest.fixture
def rng():
    return random.Random(1234)


@pytest.fixture
def zhang3():
    return make_phi_algebra(3, [1, 0, 0], "zhang-3")


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance_lines.append(f"{'PASS' if report.passed else 'FAIL'}  {name}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
