"""
Shared fixtures for the EPR quantum games tests.
"""

import math

import numpy as np
import pytest

from src.games.embedding import embedding_solver
from src.models.game import DirectionPair, GameConfig, PayoffMatrix, PlayerParams

PD = PayoffMatrix(g00=3.0, g01=0.0, g10=4.0, g11=2.0)
SH = PayoffMatrix(g00=10.0, g01=0.0, g10=8.0, g11=7.0)


@pytest.fixture
def pd() -> PayoffMatrix:
    return PD


@pytest.fixture
def sh() -> PayoffMatrix:
    return SH


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture
def canonical():
    return embedding_solver()


def random_params(rng: np.random.Generator) -> PlayerParams:
    e1, e2, e3 = rng.uniform(0.0, 2 * math.pi, size=3)
    return PlayerParams(e1=e1, e2=e2, e3=e3)


def random_directions(rng: np.random.Generator) -> DirectionPair:
    k1, k2 = rng.uniform(0.0, 2 * math.pi, size=2)
    return DirectionPair(k1=k1, k2=k2)


def random_payoffs(rng: np.random.Generator) -> PayoffMatrix:
    return PayoffMatrix.from_sequence(rng.uniform(-10.0, 10.0, size=4))


def random_config(rng: np.random.Generator, payoffs: PayoffMatrix = PD) -> GameConfig:
    return GameConfig(
        payoffs=payoffs,
        alice=random_params(rng),
        bob=random_params(rng),
        alice_directions=random_directions(rng),
        bob_directions=random_directions(rng),
        gamma=float(rng.uniform(0.0, math.pi / 2)),
    )
