"""
Tests for the closed-form outcome probabilities.
"""

import math

import pytest

from src.engine.probabilities import (
    DIRECTION_PAIRS,
    OUTCOMES,
    distribution_table,
    outcome_distribution,
    outcome_probability,
)
from src.models.game import GameConfig, OutcomeDistribution
from src.utils.errors import DomainError

from .conftest import random_config


def test_probability_axioms_on_random_configurations(rng):
    for _ in range(1000):
        cfg = random_config(rng)
        for i, j in DIRECTION_PAIRS:
            distribution = outcome_distribution(i, j, cfg)
            assert all(-1e-12 <= p <= 1 + 1e-12 for p in distribution.as_tuple())
            assert distribution.total == pytest.approx(1.0, abs=1e-12)


def test_unentangled_distribution_factorizes(rng):
    for _ in range(200):
        cfg = random_config(rng).with_gamma(0.0)
        for i, j in DIRECTION_PAIRS:
            d = outcome_distribution(i, j, cfg)
            alice0, bob0 = d.p00 + d.p01, d.p00 + d.p10
            assert d.p00 == pytest.approx(alice0 * bob0, abs=1e-12)
            assert d.p11 == pytest.approx((1 - alice0) * (1 - bob0), abs=1e-12)


def test_canonical_embedding_at_maximal_entanglement(canonical, pd):
    cfg = canonical.config(math.pi / 2, pd)
    distribution = outcome_distribution(1, 1, cfg)
    assert distribution.as_tuple() == pytest.approx((0.5, 0.0, 0.0, 0.5), abs=1e-12)


def test_canonical_embedding_unentangled_is_deterministic(canonical, pd):
    cfg = canonical.config(0.0, pd)
    assert outcome_probability(0, 0, 1, 1, cfg) == pytest.approx(1.0, abs=1e-12)
    assert outcome_probability(1, 1, 2, 2, cfg) == pytest.approx(1.0, abs=1e-12)
    assert outcome_probability(0, 1, 1, 2, cfg) == pytest.approx(1.0, abs=1e-12)


def test_distribution_table_covers_all_direction_pairs(canonical, pd):
    table = distribution_table(canonical.config(0.4, pd))
    assert set(table) == set(DIRECTION_PAIRS)
    for (i, j), distribution in table.items():
        assert distribution.get(1, 0) == outcome_probability(1, 0, i, j, canonical.config(0.4, pd))


@pytest.mark.parametrize("args", [(2, 0, 1, 1), (0, -1, 1, 1), (0, 0, 0, 1), (0, 0, 1, 3)])
def test_invalid_bits_and_indices_are_rejected(pd, args):
    with pytest.raises(DomainError):
        outcome_probability(*args, GameConfig(payoffs=pd))


def test_gamma_outside_range_is_rejected(pd):
    with pytest.raises(ValueError):
        GameConfig(payoffs=pd, gamma=-0.1)
    with pytest.raises(DomainError):
        GameConfig(payoffs=pd).with_gamma(math.pi)


def test_outcome_order_is_alice_major():
    assert OUTCOMES == ((0, 0), (0, 1), (1, 0), (1, 1))


@pytest.mark.parametrize(
    "values",
    [
        (5.0, -3.0, 0.7, 0.1),
        (0.5, 0.5, 0.5, 0.5),
        (0.25, 0.25, 0.25, 0.25 + 1e-9),
        (1.0 + 1e-9, 0.0, 0.0, -1e-9),
    ],
)
def test_distribution_record_rejects_non_distributions(values):
    with pytest.raises(ValueError):
        OutcomeDistribution(p00=values[0], p01=values[1], p10=values[2], p11=values[3])


def test_distribution_record_allows_float_noise():
    noisy = OutcomeDistribution(p00=1.0 + 5e-13, p01=-5e-13, p10=0.0, p11=0.0)
    assert noisy.total == pytest.approx(1.0, abs=1e-12)
