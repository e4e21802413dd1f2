from itertools import combinations_with_replacement
from typing import Callable, Iterator

import numpy as np
import pytest

from caterpillar.config import DEFAULT_SEED
from caterpillar.pieri import InterlacingPattern, Orientation
from caterpillar.weights import SlWeight


def all_weights(m: int, max_entry: int) -> Iterator[SlWeight]:
    """Every dominant SL_m weight with entries at most max_entry."""
    for combo in combinations_with_replacement(range(max_entry, -1, -1), m - 1):
        yield SlWeight(m=m, entries=combo)


def random_pattern(rng: np.random.Generator, m: int, max_entry: int, orientation: Orientation) -> InterlacingPattern:
    top = tuple(sorted((int(x) for x in rng.integers(0, max_entry + 1, size=m)), reverse=True))
    bottom = tuple(int(rng.integers(top[i + 1], top[i] + 1)) for i in range(m - 1))
    return InterlacingPattern(m=m, top=top, bottom=bottom, orientation=orientation)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED)


@pytest.fixture
def weights() -> Callable[[int, int], Iterator[SlWeight]]:
    return all_weights


@pytest.fixture
def make_pattern() -> Callable[..., InterlacingPattern]:
    return random_pattern
