import random
from fractions import Fraction

import pytest

from sympineq.spectral import gram
from sympineq.vectors import RationalVector

# 4x4 integer interval matrix and its variant with one flipped sign; the Gram
# products share a trace but differ in their spectral coefficients, which makes
# the pair a good workout for every verifier in the package.
SAMPLE_Q = ((1, 1, 1, 1),
            (0, 1, 1, 0),
            (0, 0, 1, 0),
            (0, 0, 1, 1))
SAMPLE_R = ((1, 1, 1, 1),
            (0, 1, 1, 0),
            (0, 0, 1, 0),
            (0, 0, 1, -1))


@pytest.fixture(scope="session")
def matrix_x():
    return gram(SAMPLE_Q)


@pytest.fixture(scope="session")
def matrix_y():
    return gram(SAMPLE_R)


def random_rational_vector(rng: random.Random, n: int, max_numerator: int = 40,
                           denominator_bound: int = 8) -> RationalVector:
    return RationalVector(
        Fraction(rng.randint(0, max_numerator), rng.randint(1, denominator_bound))
        for _ in range(n))


@pytest.fixture
def rng():
    return random.Random(20260809)
