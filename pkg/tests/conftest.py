import random

import pytest

from app.config import Settings
from app.coxeter import type_a, type_d, type_i2
from app.verifier import RelationVerifier


@pytest.fixture
def a2():
    return type_a(2)


@pytest.fixture
def a3():
    return type_a(3)


@pytest.fixture
def d4():
    return type_d(4)


@pytest.fixture
def i2_5():
    return type_i2(5)


@pytest.fixture
def rng():
    # fixed seed keeps the randomized oracle suites reproducible
    return random.Random(20240229)


@pytest.fixture
def verifier():
    return RelationVerifier(Settings(oracle_budget=200_000, oracle_max_length=10))


@pytest.fixture
def random_letters(rng):
    def draw(rank, max_length, min_length=0):
        return [rng.randint(1, rank) for _ in range(rng.randint(min_length, max_length))]
    return draw
