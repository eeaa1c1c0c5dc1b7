from __future__ import annotations

import random

import pytest

from gfminrank import SimpleGraph, field_new
from gfminrank.refdata import FULLHOUSE_EDGES


@pytest.fixture(scope="session")
def gf2():
    return field_new(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return field_new(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return field_new(5, 1)


@pytest.fixture(scope="session")
def gf9():
    return field_new(3, 2)


@pytest.fixture(scope="session")
def fullhouse():
    return SimpleGraph.from_edges(5, FULLHOUSE_EDGES)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
