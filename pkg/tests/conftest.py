import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from pdens import new_sequence

# The homometric pair: same gap multiset up to k-apart products, identical
# fingerprints, yet not isometric.
S15_POINTS = [0, 1, 3, 4, 5, 7, 9, 10, 12]
Q15_POINTS = [0, 1, 3, 4, 6, 8, 9, 12, 14]


@pytest.fixture
def s15():
    return new_sequence(15, S15_POINTS)


@pytest.fixture
def q15():
    return new_sequence(15, Q15_POINTS)


@pytest.fixture
def tri():
    return new_sequence(1, [0, Fraction(1, 3), Fraction(1, 2)])


def random_unit_sequence(rng: random.Random, max_m: int = 8, max_den: int = 60):
    """Unit-period sequence with rational points over one denominator <= max_den."""
    m = rng.randint(1, max_m)
    den = rng.randint(max(m, 2), max_den)
    nums = rng.sample(range(den), m)
    return new_sequence(1, [Fraction(v, den) for v in sorted(nums)])


def random_generic_sequence(rng: random.Random, max_m: int = 10):
    """Unit-period sequence with pairwise distinct gaps (distinct numerators)."""
    m = rng.randint(1, max_m)
    parts = rng.sample(range(1, 12 * max_m), m)
    total = sum(parts)
    pts = [Fraction(0)]
    for p in parts[:-1]:
        pts.append(pts[-1] + Fraction(p, total))
    return new_sequence(1, pts)


@st.composite
def unit_sequences(draw, max_m: int = 6, max_den: int = 40):
    m = draw(st.integers(1, max_m))
    den = draw(st.integers(max(m, 2), max_den))
    nums = draw(st.lists(st.integers(0, den - 1), min_size=m, max_size=m, unique=True))
    return new_sequence(1, [Fraction(v, den) for v in sorted(nums)])


@st.composite
def generic_sequences(draw, max_m: int = 7):
    m = draw(st.integers(1, max_m))
    parts = draw(
        st.lists(st.integers(1, 10 * max_m), min_size=m, max_size=m, unique=True)
    )
    total = sum(parts)
    pts = [Fraction(0)]
    for p in parts[:-1]:
        pts.append(pts[-1] + Fraction(p, total))
    return new_sequence(1, pts)


small_fractions = st.fractions(min_value=0, max_value=2, max_denominator=48)
