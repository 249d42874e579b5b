import random
from pathlib import Path

import pytest

from mixla import Array, LevelProfile, parse_array

DATA = Path(__file__).parent / "data"


def load(name: str) -> Array:
    return parse_array((DATA / name).read_text())


@pytest.fixture(scope="session")
def la12() -> Array:
    """12-run strength-2 locating array over levels (2,2,2,2,3)."""
    return load("la12_22223.la")


@pytest.fixture(scope="session")
def la24_wide() -> Array:
    """24-run locating array over (2,2,4,2,3): la12 with column 3 doubled."""
    return load("la24_22423.la")


@pytest.fixture(scope="session")
def la24_narrow() -> Array:
    """24-run locating array over (2,2,3,2,3): la12 with column 3 grown to 3."""
    return load("la24_22323.la")


@pytest.fixture(scope="session")
def moa246() -> Array:
    """24-run distinct-index orthogonal array over (2,4,6)."""
    return load("moa24_246.la")


@pytest.fixture(scope="session")
def la42() -> Array:
    """42-run strength-2 locating array over (3,6,7)."""
    return load("la42_367.la")


def random_profile(rng: random.Random, sort=True) -> LevelProfile:
    k = rng.randint(3, 5)
    levels = [rng.randint(2, 4) for _ in range(k)]
    if sort:
        levels.sort()
    t = rng.randint(1, min(2, k - 1))
    return LevelProfile(tuple(levels), t)


def random_array(rng: random.Random, profile: LevelProfile, n_rows: int) -> Array:
    rows = [
        [rng.randrange(v) for v in profile.levels] for _ in range(n_rows)
    ]
    return Array(profile, rows)
