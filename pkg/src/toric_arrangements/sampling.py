"""Seeded random instances for the property suites."""

from __future__ import annotations

import os
import random
from fractions import Fraction
from itertools import combinations

from .arrangements import SubsetCollection
from .exact import GaussianRational
from .mapspace import MapTuple, RootMultiset, in_E

SEED_ENV = "TORIC_ARR_SEED"
DEFAULT_SEED = 20240607


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw else DEFAULT_SEED


def random_collection(rng: random.Random, n_min: int = 2, n_max: int = 8, max_members: int = 6) -> SubsetCollection:
    n = rng.randint(n_min, n_max)
    pool = [c for r in range(2, n + 1) for c in combinations(range(n), r)]
    k = rng.randint(1, min(max_members, len(pool)))
    return SubsetCollection(n, tuple(rng.sample(pool, k)))


def random_gaussian(rng: random.Random, num: int = 5, den: int = 3, real_below: int | None = None) -> GaussianRational:
    re = Fraction(rng.randint(-num, num), rng.randint(1, den))
    if real_below is not None and re >= real_below:
        re = Fraction(real_below) - 1 - abs(re)
    return GaussianRational(re, Fraction(rng.randint(-num, num), rng.randint(1, den)))


def random_root_tuple(rng: random.Random, n: int, d: int, pool_size: int | None = None, real_below: int | None = None) -> MapTuple:
    """Root-form tuple whose roots come from a small shared pool, so collisions are common."""
    size = pool_size or rng.randint(2, 2 * d + 2)
    pool = sorted({random_gaussian(rng, real_below=real_below) for _ in range(size)})
    comps = []
    for _ in range(n):
        comps.append(RootMultiset.of(*(rng.choice(pool) for _ in range(d))))
    return MapTuple(tuple(comps))


def random_E_member(rng: random.Random, I: SubsetCollection, d: int, tries: int = 1000) -> MapTuple:
    """Rejection-sample a member of E_d^I(U_d): roots have real part below d."""
    for _ in range(tries):
        F = random_root_tuple(rng, I.n, d, pool_size=rng.randint(d + 1, 2 * I.n * d + 2), real_below=d)
        if in_E(F, I):
            return F
    raise RuntimeError("could not sample a member; widen the root pool")


def random_distinct_points(rng: random.Random, k: int) -> list[GaussianRational]:
    pts: set[GaussianRational] = set()
    while len(pts) < k:
        pts.add(random_gaussian(rng, num=9, den=4))
    return sorted(pts)
