import random
from itertools import chain, combinations

import pytest


def all_subsets(n):
    return list(chain.from_iterable(combinations(range(n), r) for r in range(n + 1)))


def brute_KI(n, members):
    """K(I) straight from the definition, using Python sets."""
    ms = [set(m) for m in members]
    return {s for s in all_subsets(n) if not any(m <= set(s) for m in ms)}


@pytest.fixture
def rng():
    return random.Random(12345)
