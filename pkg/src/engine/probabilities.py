"""
Closed-form outcome probabilities of the EPR game.

P_mn = 1/4 [1 + cos g ((-1)^m X_i + (-1)^n Y_j) + (-1)^(m+n) (X_i Y_j + sin g Z_ij)]
"""

import math
from typing import Dict, Optional, Tuple

from ..config.settings import config
from ..models.game import GameConfig, OutcomeDistribution, check_bit, check_direction_index
from ..utils.errors import ConventionError
from ..utils.logging import get_logger
from .directions import x_fn, y_fn, z_fn

logger = get_logger(__name__)

DIRECTION_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))
OUTCOMES = ((0, 0), (0, 1), (1, 0), (1, 1))


def direction_terms(i: int, j: int, cfg: GameConfig) -> Tuple[float, float, float]:
    """(X_i, Y_j, Z_ij) for the direction pair (i, j)."""
    kappa1 = cfg.alice_directions.angle(check_direction_index("i", i))
    kappa2 = cfg.bob_directions.angle(check_direction_index("j", j))
    return x_fn(kappa1, cfg.alice), y_fn(kappa2, cfg.bob), z_fn(kappa1, kappa2, cfg.alice, cfg.bob)


def _checked(probability: float, tolerance: float) -> float:
    if probability < 0.0:
        if probability < -tolerance:
            raise ConventionError(f"negative probability {probability!r}")
        logger.debug(f"Clamping float noise {probability!r} to 0")
        return 0.0
    if probability > 1.0:
        if probability > 1.0 + tolerance:
            raise ConventionError(f"probability {probability!r} exceeds 1")
        logger.debug(f"Clamping float noise {probability!r} to 1")
        return 1.0
    return probability


def outcome_probability(m: int, n: int, i: int, j: int, cfg: GameConfig, tolerance: Optional[float] = None) -> float:
    """
    Probability of outcome (m, n) when Alice measures along direction i and Bob along j.

    Args:
        m: Alice's outcome bit (0 for |0>)
        n: Bob's outcome bit
        i: Alice's direction index (1 or 2)
        j: Bob's direction index (1 or 2)
        cfg: Full parameter set
        tolerance: Float-noise allowance outside [0, 1]

    Returns:
        The probability, with float noise clamped into [0, 1]
    """
    sign_m = -1.0 if check_bit("m", m) else 1.0
    sign_n = -1.0 if check_bit("n", n) else 1.0
    x, y, z = direction_terms(i, j, cfg)
    cos_g, sin_g = math.cos(cfg.gamma), math.sin(cfg.gamma)
    probability = 0.25 * (1.0 + cos_g * (sign_m * x + sign_n * y) + sign_m * sign_n * (x * y + sin_g * z))
    return _checked(probability, config.tolerances.probability if tolerance is None else tolerance)


def outcome_distribution(i: int, j: int, cfg: GameConfig) -> OutcomeDistribution:
    p00, p01, p10, p11 = (outcome_probability(m, n, i, j, cfg) for m, n in OUTCOMES)
    return OutcomeDistribution(p00=p00, p01=p01, p10=p10, p11=p11)


def distribution_table(cfg: GameConfig) -> Dict[Tuple[int, int], OutcomeDistribution]:
    """Outcome distributions for all four direction pairs."""
    return {(i, j): outcome_distribution(i, j, cfg) for i, j in DIRECTION_PAIRS}
