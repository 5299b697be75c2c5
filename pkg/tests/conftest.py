import random

import pytest

from warplis.model import DissimilaritySpec, TimeSeries, build_dissimilarity

KINDS = ("absolute-difference", "squared-difference")


def random_series(rng: random.Random, max_len: int, values=(0, 1, 2, 3)) -> TimeSeries:
    return TimeSeries(tuple(rng.choice(values) for _ in range(rng.randint(1, max_len))))


def random_instance(rng: random.Random, max_len: int, values=(0, 1, 2, 3)):
    a = random_series(rng, max_len, values)
    b = random_series(rng, max_len, values)
    spec = DissimilaritySpec(kind=rng.choice(KINDS))
    return a, b, spec, build_dissimilarity(a, b, spec)


def random_permutation(rng: random.Random, n: int) -> list:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
