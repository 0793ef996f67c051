"""
Nash-equilibrium enumeration, certification and the entanglement phase transition.

Both players' NE gaps are linear in the opponent's mixing probability (see
GapCoefficients), so every equilibrium sits on a pure corner or on the single interior
point where both players are indifferent.
"""

import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from ..config.settings import config
from ..models.game import (
    GAMMA_MAX,
    Equilibrium,
    EquilibriumKind,
    EquilibriumReport,
    GameClass,
    GameConfig,
    PayoffMatrix,
    StrategyProfile,
    TransitionEstimate,
    check_gamma,
)
from ..utils.errors import ConventionError, GameClassError, NoTransitionError
from ..utils.logging import get_logger
from .embedding import satisfies_embedding
from .payoffs import (
    GapCoefficients,
    embedded_gap_coefficients,
    embedded_ne_gap,
    embedded_payoff,
    embedded_payoff_bob,
    expected_payoff_bob,
    expected_payoff_general,
    gap_coefficients,
    ne_gap_alice,
    ne_gap_bob,
)

logger = get_logger(__name__)

PayoffPair = Callable[[float, float], Tuple[float, float]]

TRANSITION_XTOL = 1e-12
TRANSITION_MAXITER = 60
TRANSITION_AGREEMENT = 1e-9


def _best_response(strategy: float, coefficient: float, tolerance: float) -> Optional[bool]:
    """
    None if strategy is not a best response to a gap line with this coefficient,
    otherwise whether it is the unique best response.
    """
    if strategy == 1.0:
        return None if coefficient < -tolerance else coefficient > tolerance
    if strategy == 0.0:
        return None if coefficient > tolerance else coefficient < -tolerance
    return False if abs(coefficient) <= tolerance else None


def _interior(value: float, tolerance: float) -> bool:
    return tolerance < value < 1.0 - tolerance


def _enumerate(gamma: float, coeffs: GapCoefficients, payoffs: PayoffPair) -> EquilibriumReport:
    tolerance = config.tolerances.equilibrium
    slope, alice_offset, bob_offset = coeffs
    xs, ys = [0.0, 1.0], [0.0, 1.0]
    notes: List[str] = []
    continuum = False

    if abs(slope) > tolerance:
        x_mixed = -bob_offset / slope  # keeps Bob indifferent
        y_mixed = -alice_offset / slope  # keeps Alice indifferent
        if _interior(x_mixed, tolerance) and _interior(y_mixed, tolerance):
            xs.insert(1, x_mixed)
            ys.insert(1, y_mixed)
        elif not (-tolerance <= x_mixed <= 1.0 + tolerance and -tolerance <= y_mixed <= 1.0 + tolerance):
            notes.append(f"mixed profile ({x_mixed:.6g}, {y_mixed:.6g}) lies outside [0, 1]; omitted")
            logger.info(f"Omitting mixed profile ({x_mixed:.6g}, {y_mixed:.6g}) at gamma={gamma:.6g}")
        else:
            notes.append(
                f"mixed profile ({x_mixed:.6g}, {y_mixed:.6g}) sits on the boundary; "
                "only the pure endpoints of the equilibrium segment are listed"
            )
    else:
        notes.append("degenerate game: best responses do not depend on the opponent")
        if abs(alice_offset) <= tolerance or abs(bob_offset) <= tolerance:
            continuum = True
            notes.append("zero NE gap for a player everywhere: continuum of equilibria")
        logger.warning(f"Degenerate game at gamma={gamma:.6g} (continuum={continuum})")

    equilibria = []
    for x in xs:
        for y in ys:
            alice_strict = _best_response(x, slope * y + alice_offset, tolerance)
            bob_strict = _best_response(y, slope * x + bob_offset, tolerance)
            if alice_strict is None or bob_strict is None:
                continue
            pure = x in (0.0, 1.0) and y in (0.0, 1.0)
            payoff_a, payoff_b = payoffs(x, y)
            equilibria.append(Equilibrium(
                profile=StrategyProfile(x=x, y=y),
                payoff_a=payoff_a,
                payoff_b=payoff_b,
                kind=EquilibriumKind.PURE if pure else EquilibriumKind.MIXED,
                strict=pure and alice_strict and bob_strict,
            ))
    return EquilibriumReport(gamma=gamma, equilibria=equilibria, continuum=continuum, notes=notes)


def find_equilibria(payoffs: PayoffMatrix, gamma: float) -> EquilibriumReport:
    """
    Nash equilibria of the embedded game at entanglement angle gamma.

    Args:
        payoffs: Alice's payoff matrix
        gamma: Entanglement angle in [0, pi/2]

    Returns:
        EquilibriumReport with payoffs from embedded_payoff
    """
    gamma = check_gamma(gamma)
    return _enumerate(
        gamma,
        embedded_gap_coefficients(gamma, payoffs),
        lambda x, y: (embedded_payoff(x, y, gamma, payoffs), embedded_payoff_bob(x, y, gamma, payoffs)),
    )


def find_equilibria_general(cfg: GameConfig, payoffs: Optional[PayoffMatrix] = None) -> EquilibriumReport:
    """Nash equilibria for arbitrary player rotors and directions."""
    matrix = cfg.payoffs if payoffs is None else payoffs
    return _enumerate(
        cfg.gamma,
        gap_coefficients(cfg, matrix),
        lambda x, y: (expected_payoff_general(x, y, cfg, matrix), expected_payoff_bob(x, y, cfg, matrix)),
    )


def certify_equilibria(
    report: EquilibriumReport,
    cfg: GameConfig,
    payoffs: Optional[PayoffMatrix] = None,
    deviations: int = 101,
    tolerance: Optional[float] = None,
) -> bool:
    """
    Check every reported profile against uniformly spaced unilateral deviations.

    Returns:
        True when no deviation improves either player's payoff by more than tolerance
    """
    if tolerance is None:
        tolerance = config.tolerances.equilibrium
    grid = np.linspace(0.0, 1.0, deviations)
    certified = True
    for eq in report.equilibria:
        x_star, y_star = eq.profile.as_tuple()
        worst_a = min(ne_gap_alice(x_star, float(x), y_star, cfg, payoffs) for x in grid)
        worst_b = min(ne_gap_bob(y_star, float(y), x_star, cfg, payoffs) for y in grid)
        if min(worst_a, worst_b) < -tolerance:
            logger.warning(f"Profile ({x_star:.6g}, {y_star:.6g}) fails certification: gaps {worst_a:.3g}, {worst_b:.3g}")
            certified = False
    return certified


def locate_transition(payoffs: PayoffMatrix) -> TransitionEstimate:
    """
    Angle below which (1, 1) stops being an equilibrium of a PD-type game.

    The analytic value arccos(D3 / (D1 + D2)) is cross-checked by bisecting the NE gap of
    (1, 1) against the deviation x = 0.

    Raises:
        NoTransitionError: if the PD preconditions fail or the ratio leaves [0, 1]
        ConventionError: if bisection and the analytic value disagree
    """
    d = payoffs.deltas()
    if d.d1 < 0 or d.d2 < 0 or d.d1 + d.d2 <= 0:
        raise NoTransitionError(
            f"no transition in [0, pi/2]: requires D1 >= 0, D2 >= 0 (got D1={d.d1:g}, D2={d.d2:g})"
        )
    ratio = d.d3 / (d.d1 + d.d2)
    if not 0.0 <= ratio <= 1.0:
        raise NoTransitionError(f"no transition in [0, pi/2]: D3/(D1+D2)={ratio:g} outside [0, 1]")
    analytic = math.acos(ratio)

    def boundary(gamma: float) -> float:
        return embedded_ne_gap(1.0, 0.0, 1.0, gamma, payoffs)

    tolerance = config.tolerances.algebra
    if abs(boundary(0.0)) <= tolerance:
        estimate = 0.0
    elif abs(boundary(GAMMA_MAX)) <= tolerance:
        estimate = GAMMA_MAX
    else:
        estimate = bisect(boundary, 0.0, GAMMA_MAX, xtol=TRANSITION_XTOL, maxiter=TRANSITION_MAXITER)

    result = TransitionEstimate(analytic=analytic, bisection=float(estimate))
    if result.difference > TRANSITION_AGREEMENT:
        raise ConventionError(
            f"transition self-check failed: analytic {analytic!r} vs bisection {estimate!r}"
        )
    logger.info(f"Transition at gamma={analytic:.12g} (bisection differs by {result.difference:.3g})")
    return result


def pd_transition_angle(payoffs: PayoffMatrix) -> float:
    return locate_transition(payoffs).analytic


def sh_mixed_ne(payoffs: PayoffMatrix, gamma: float) -> StrategyProfile:
    """
    Interior equilibrium of a Stag Hunt: x* = y* = [cos g (D1 + D2) + D2 - D1] / (2 D3).

    Raises:
        GameClassError: unless D3 > D2 > 0, D1 + D2 > 0 and D3 > D1 + D2
    """
    if classify_game(payoffs) is not GameClass.STAG_HUNT:
        raise GameClassError(f"Stag Hunt conditions fail for {payoffs.deltas()}")
    d = payoffs.deltas()
    value = (math.cos(check_gamma(gamma)) * (d.d1 + d.d2) + d.d2 - d.d1) / (2 * d.d3)
    return StrategyProfile(x=value, y=value)


def classify_game(payoffs: PayoffMatrix) -> GameClass:
    g = payoffs
    if g.g10 > g.g00 > g.g11 > g.g01:
        return GameClass.PRISONERS_DILEMMA
    d = g.deltas()
    if d.d3 > d.d2 > 0 and d.d1 + d.d2 > 0 and d.d3 > d.d1 + d.d2:
        return GameClass.STAG_HUNT
    return GameClass.OTHER


def analyze_config(cfg: GameConfig) -> EquilibriumReport:
    """Embedded enumeration when cfg satisfies the embedding constraints, general otherwise."""
    if satisfies_embedding(cfg):
        return find_equilibria(cfg.payoffs, cfg.gamma)
    logger.debug("Configuration is not an embedding solution; using the general gap lines")
    return find_equilibria_general(cfg)
