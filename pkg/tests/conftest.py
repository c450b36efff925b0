import random

import pytest

from quasilinkage import fixtures
from quasilinkage.games import flip, near_apex, proper_flips
from quasilinkage.realizability import is_generic, short_sets


def random_real_game(rng: random.Random, n: int):
    """Short sets of a random generic integer length vector, every singleton short."""
    while True:
        lengths = [rng.randint(1, 4 * n) for _ in range(n)]
        if is_generic(lengths) and 2 * max(lengths) < sum(lengths):
            return short_sets(lengths)


def random_walk_game(rng: random.Random, n: int, steps: int | None = None):
    """Random walk of proper flips from the near-apex game (reaches imaginary games)."""
    g = near_apex(n)
    for _ in range(steps if steps is not None else rng.randint(0, 3 * n)):
        options = proper_flips(g)
        if not options:
            break
        g = flip(g, rng.choice(options))
    return g


def random_game(rng: random.Random, n: int):
    return random_real_game(rng, n) if rng.random() < 0.5 else random_walk_game(rng, n)


@pytest.fixture(scope="session")
def example6():
    return fixtures.example6()


@pytest.fixture(scope="session")
def example7():
    return fixtures.example7()


@pytest.fixture(scope="session")
def pentagon():
    return fixtures.pentagon()


@pytest.fixture(scope="session")
def flip_n6():
    return fixtures.paper_flip_n6()
