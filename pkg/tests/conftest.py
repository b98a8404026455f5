import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from terrainguard import parse_terrain  # noqa: E402
from terrainguard.gen import GenSpec, gen_terrain  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

VALLEY = [(0, 2), (1, 0), (2, 2)]
PEAK = [(0, 0), (1, 2), (2, 0)]
W_SHAPE = [(0, 2), (1, 0), (2, 1), (3, 0), (4, 2)]


@pytest.fixture
def valley():
    return parse_terrain(VALLEY)


@pytest.fixture
def peak():
    return parse_terrain(PEAK)


@pytest.fixture
def w_shape():
    return parse_terrain(W_SHAPE)


def random_terrains(count, n_lo, n_hi, seed, heights=(0, 8), profiles=("uniform", "spiky", "staircase")):
    """Deterministic stream of generated terrains cycling through profiles."""
    rng = random.Random(seed)
    for i in range(count):
        spec = GenSpec(rng.randint(n_lo, n_hi), rng.getrandbits(32), heights, profiles[i % len(profiles)])
        yield gen_terrain(spec)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)


small_fracs = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def terrains(draw, min_n=2, max_n=12):
    """Terrains with rational coordinates and uneven x spacing."""
    n = draw(st.integers(min_n, max_n))
    steps = draw(st.lists(st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4),
                          min_size=n - 1, max_size=n - 1))
    ys = draw(st.lists(small_fracs, min_size=n, max_size=n))
    xs = [Fraction(0)]
    for s in steps:
        xs.append(xs[-1] + s)
    return parse_terrain(list(zip(xs, ys)))
