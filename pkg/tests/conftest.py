import random

import pytest

from pomsetblock.cli import Problem, load_problem
from pomsetblock.fixtures import NAMES, fixture_path
from pomsetblock.pomset import Pomset


def load_fixture(name: str) -> Problem:
    return load_problem(fixture_path(name))


@pytest.fixture(scope="session")
def problems() -> dict[str, Problem]:
    return {name: load_fixture(name) for name in NAMES}


def random_pomset(rng: random.Random, s: int, height: int, density: float = 0.4) -> Pomset:
    """Random strict order: orient pairs along a random permutation, so acyclic."""
    perm = rng.sample(range(1, s + 1), s)
    pairs = [
        (perm[i], perm[j])
        for i in range(s)
        for j in range(i + 1, s)
        if rng.random() < density
    ]
    return Pomset.from_relations(s, height, pairs)
