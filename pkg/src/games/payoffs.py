"""
Expected payoffs and Nash-equilibrium gaps for the EPR game.

Alice picks her first direction with probability x, Bob with probability y. Bob's payoff
matrix is the transpose of Alice's.
"""

import math
from typing import NamedTuple, Optional

from ..engine.probabilities import DIRECTION_PAIRS, OUTCOMES, direction_terms, outcome_probability
from ..models.game import GameConfig, PayoffMatrix, check_bit, check_direction_index, check_gamma, check_mixing
from ..utils.errors import DomainError


class DirectionMoments(NamedTuple):
    x1: float
    x2: float
    y1: float
    y2: float
    z11: float
    z12: float
    z21: float
    z22: float


class GapCoefficients(NamedTuple):
    """
    NE gaps as lines in the opponent's strategy.

    Pi_A(x*, y*) - Pi_A(x, y*) = (x* - x)(slope y* + alice_offset) / 4 and
    Pi_B(x*, y*) - Pi_B(x*, y) = (y* - y)(slope x* + bob_offset) / 4.
    """
    slope: float
    alice_offset: float
    bob_offset: float


def direction_moments(cfg: GameConfig) -> DirectionMoments:
    x1, y1, z11 = direction_terms(1, 1, cfg)
    _, y2, z12 = direction_terms(1, 2, cfg)
    x2, _, z21 = direction_terms(2, 1, cfg)
    _, _, z22 = direction_terms(2, 2, cfg)
    return DirectionMoments(x1, x2, y1, y2, z11, z12, z21, z22)


def _matrix(cfg: GameConfig, payoffs: Optional[PayoffMatrix]) -> PayoffMatrix:
    return cfg.payoffs if payoffs is None else payoffs


def expected_payoff_general(x: float, y: float, cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> float:
    """
    Alice's expected payoff for arbitrary player rotors and directions.

    Args:
        x: Probability Alice measures along her first direction
        y: Probability Bob measures along his first direction
        cfg: Full parameter set
        payoffs: Payoff matrix (defaults to cfg.payoffs)

    Returns:
        Pi_A(x, y)
    """
    x, y = check_mixing("x", x), check_mixing("y", y)
    matrix = _matrix(cfg, payoffs)
    d = matrix.deltas()
    mo = direction_moments(cfg)
    cos_g, sin_g = math.cos(cfg.gamma), math.sin(cfg.gamma)

    alice_mean = (mo.x1 - mo.x2) * x + mo.x2
    bob_mean = (mo.y1 - mo.y2) * y + mo.y2
    z_mean = (
        mo.z22
        + x * (mo.z12 - mo.z22)
        + y * (mo.z21 - mo.z22)
        + x * y * (mo.z11 + mo.z22 - mo.z12 - mo.z21)
    )
    correlation = alice_mean * bob_mean + sin_g * z_mean
    return 0.25 * (
        matrix.total()
        + d.d3 * correlation
        - cos_g * ((d.d1 + d.d2) * alice_mean - d.d4 * bob_mean)
    )


def expected_payoff_bob(x: float, y: float, cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> float:
    """Bob's expected payoff: Alice's formula with the players exchanged."""
    return expected_payoff_general(y, x, cfg.swap_players(), payoffs)


def brute_force_payoff(
    x: float,
    y: float,
    cfg: GameConfig,
    payoffs: Optional[PayoffMatrix] = None,
    player: str = "alice",
) -> float:
    """Direct sum over direction pairs and outcomes of probability times payoff."""
    x, y = check_mixing("x", x), check_mixing("y", y)
    if player not in ("alice", "bob"):
        raise DomainError(f"player must be 'alice' or 'bob', got {player!r}")
    matrix = _matrix(cfg, payoffs)
    weights = {(1, 1): x * y, (1, 2): x * (1 - y), (2, 1): (1 - x) * y, (2, 2): (1 - x) * (1 - y)}
    total = 0.0
    for i, j in DIRECTION_PAIRS:
        for m, n in OUTCOMES:
            entry = matrix.entry(m, n) if player == "alice" else matrix.entry(n, m)
            total += weights[(i, j)] * outcome_probability(m, n, i, j, cfg) * entry
    return total


def gap_coefficients(cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> GapCoefficients:
    matrix = _matrix(cfg, payoffs)
    d = matrix.deltas()
    mo = direction_moments(cfg)
    cos_g, sin_g = math.cos(cfg.gamma), math.sin(cfg.gamma)
    slope = d.d3 * ((mo.x1 - mo.x2) * (mo.y1 - mo.y2) + sin_g * (mo.z11 + mo.z22 - mo.z12 - mo.z21))
    alice_offset = (
        d.d3 * ((mo.x1 - mo.x2) * mo.y2 + (mo.z12 - mo.z22) * sin_g)
        - cos_g * (d.d1 + d.d2) * (mo.x1 - mo.x2)
    )
    bob_offset = (
        d.d3 * ((mo.y1 - mo.y2) * mo.x2 + (mo.z21 - mo.z22) * sin_g)
        - cos_g * (d.d1 + d.d2) * (mo.y1 - mo.y2)
    )
    return GapCoefficients(slope, alice_offset, bob_offset)


def ne_gap_alice(x_star: float, x: float, y_star: float, cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> float:
    """Pi_A(x*, y*) - Pi_A(x, y*); non-negative for every x iff x* is a best response."""
    x_star, x, y_star = check_mixing("x*", x_star), check_mixing("x", x), check_mixing("y*", y_star)
    coeffs = gap_coefficients(cfg, payoffs)
    return 0.25 * (x_star - x) * (coeffs.slope * y_star + coeffs.alice_offset)


def ne_gap_bob(y_star: float, y: float, x_star: float, cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> float:
    """Pi_B(x*, y*) - Pi_B(x*, y)."""
    y_star, y, x_star = check_mixing("y*", y_star), check_mixing("y", y), check_mixing("x*", x_star)
    coeffs = gap_coefficients(cfg, payoffs)
    return 0.25 * (y_star - y) * (coeffs.slope * x_star + coeffs.bob_offset)


# Embedded game: X1 = Y1 = 1, X2 = Y2 = -1, Z_ij = 0
def embedded_payoff(x: float, y: float, gamma: float, payoffs: PayoffMatrix) -> float:
    """Alice's payoff in the embedded game; bilinear in (x, y) at gamma = 0."""
    x, y, gamma = check_mixing("x", x), check_mixing("y", y), check_gamma(gamma)
    g = payoffs
    d = g.deltas()
    cos_g = math.cos(gamma)
    return 0.5 * (
        g.g00 + g.g11 - cos_g * (g.g00 - g.g11)
        + 2 * x * y * d.d3
        - x * (d.d3 + cos_g * (d.d1 + d.d2))
        - y * (d.d3 - cos_g * d.d4)
    )


def embedded_payoff_bob(x: float, y: float, gamma: float, payoffs: PayoffMatrix) -> float:
    return embedded_payoff(y, x, gamma, payoffs)


def embedded_ne_gap(x_star: float, x: float, y_star: float, gamma: float, payoffs: PayoffMatrix) -> float:
    """Pi_A(x*, y*) - Pi_A(x, y*) = (x* - x)[D3 (2y* - 1) - cos g (D1 + D2)] / 2."""
    x_star, x, y_star = check_mixing("x*", x_star), check_mixing("x", x), check_mixing("y*", y_star)
    d = payoffs.deltas()
    return 0.5 * (x_star - x) * (d.d3 * (2 * y_star - 1) - math.cos(check_gamma(gamma)) * (d.d1 + d.d2))


def embedded_gap_coefficients(gamma: float, payoffs: PayoffMatrix) -> GapCoefficients:
    d = payoffs.deltas()
    offset = -2 * d.d3 - 2 * math.cos(check_gamma(gamma)) * (d.d1 + d.d2)
    return GapCoefficients(4 * d.d3, offset, offset)


def embedded_probabilities(m: int, n: int, i: int, j: int, gamma: float) -> float:
    """(P_mn)_ij = 1/4 [1 + cos g ((-1)^(m+i+1) + (-1)^(n+j+1)) + (-1)^(m+n+i+j)]."""
    m, n = check_bit("m", m), check_bit("n", n)
    i, j = check_direction_index("i", i), check_direction_index("j", j)
    cos_g = math.cos(check_gamma(gamma))
    return 0.25 * (1 + cos_g * ((-1) ** (m + i + 1) + (-1) ** (n + j + 1)) + (-1) ** (m + n + i + j))


def classical_payoff(x: float, y: float, payoffs: PayoffMatrix) -> float:
    """Bilinear mixed-strategy payoff of the classical game."""
    x, y = check_mixing("x", x), check_mixing("y", y)
    g = payoffs
    return g.g11 + x * (g.g01 - g.g11) + y * (g.g10 - g.g11) + x * y * (g.g00 - g.g01 - g.g10 + g.g11)


def corner_payoff(x2: float, y2: float, payoffs: PayoffMatrix) -> float:
    """Pi_A(0, 0) at gamma = 0 for second-direction values X2, Y2."""
    g = payoffs
    return 0.25 * (
        g.g00 * (1 + x2) * (1 + y2)
        + g.g10 * (1 - x2) * (1 + y2)
        + g.g01 * (1 + x2) * (1 - y2)
        + g.g11 * (1 - x2) * (1 - y2)
    )
