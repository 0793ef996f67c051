"""
Tests for equilibrium enumeration, certification and the PD phase transition.
"""

import math

import numpy as np
import pytest

from src.games.equilibria import (
    analyze_config,
    certify_equilibria,
    classify_game,
    find_equilibria,
    find_equilibria_general,
    locate_transition,
    pd_transition_angle,
    sh_mixed_ne,
)
from src.models.game import EquilibriumKind, GameClass, GameConfig, PayoffMatrix, StrategyProfile
from src.utils.errors import ConventionError, DomainError, GameClassError, NoTransitionError

from .conftest import random_config, random_payoffs

GAMMA_GRID = np.linspace(0.0, math.pi / 2, 101)


def _pure_profiles(report):
    return sorted(eq.profile.as_tuple() for eq in report.pure())


def test_classical_pd_has_unique_defect_equilibrium(pd):
    report = find_equilibria(pd, 0.0)
    assert report.profiles() == [(0.0, 0.0)]
    (eq,) = report.equilibria
    assert (eq.payoff_a, eq.payoff_b) == (pytest.approx(2.0, abs=1e-12), pytest.approx(2.0, abs=1e-12))
    assert eq.kind is EquilibriumKind.PURE and eq.strict
    assert any("outside [0, 1]" in note for note in report.notes)


def test_maximally_entangled_pd(pd):
    report = find_equilibria(pd, math.pi / 2)
    assert _pure_profiles(report) == [(0.0, 0.0), (1.0, 1.0)]
    for eq in report.pure():
        assert eq.payoff_a == pytest.approx(2.5, abs=1e-12)
        assert eq.payoff_b == pytest.approx(2.5, abs=1e-12)
        assert eq.strict
    (mixed,) = report.mixed()
    assert mixed.profile.as_tuple() == pytest.approx((0.5, 0.5), abs=1e-12)
    assert not mixed.strict


def test_classical_stag_hunt(sh):
    report = find_equilibria(sh, 0.0)
    assert _pure_profiles(report) == [(0.0, 0.0), (1.0, 1.0)]
    (mixed,) = report.mixed()
    assert mixed.profile.x == pytest.approx(7 / 9, abs=1e-12)
    assert mixed.profile.y == pytest.approx(7 / 9, abs=1e-12)


def test_stag_hunt_mixed_equilibrium_follows_entanglement(sh):
    for gamma in GAMMA_GRID:
        expected = (5 * math.cos(gamma) + 9) / 18
        profile = sh_mixed_ne(sh, gamma)
        assert profile.x == pytest.approx(expected, abs=1e-12)
        assert profile.y == pytest.approx(expected, abs=1e-12)
        (mixed,) = find_equilibria(sh, gamma).mixed()
        assert mixed.profile.x == pytest.approx(expected, abs=1e-12)
    assert sh_mixed_ne(sh, math.pi / 2).x == pytest.approx(0.5, abs=1e-12)
    assert sh_mixed_ne(sh, 0.0).x == pytest.approx(7 / 9, abs=1e-12)


def test_sh_mixed_ne_rejects_other_games(pd):
    with pytest.raises(GameClassError):
        sh_mixed_ne(pd, 0.0)


def test_stag_hunt_pure_payoffs_converge(sh):
    report = find_equilibria(sh, math.pi / 2)
    payoffs = {eq.profile.as_tuple(): eq.payoff_a for eq in report.pure()}
    assert payoffs[(0.0, 0.0)] == pytest.approx(8.5, abs=1e-12)
    assert payoffs[(1.0, 1.0)] == pytest.approx(8.5, abs=1e-12)


def test_anti_coordination_at_maximal_entanglement():
    payoffs = PayoffMatrix(g00=3.0, g01=1.0, g10=5.0, g11=0.0)
    report = find_equilibria(payoffs, math.pi / 2)
    assert _pure_profiles(report) == [(0.0, 1.0), (1.0, 0.0)]
    for eq in report.pure():
        assert eq.payoff_a == pytest.approx(3.0, abs=1e-12)


def test_reported_equilibria_are_certified(rng, canonical, pd, sh):
    for payoffs in (pd, sh):
        for gamma in GAMMA_GRID[::10]:
            report = find_equilibria(payoffs, gamma)
            assert certify_equilibria(report, canonical.config(gamma, payoffs))
    for _ in range(100):
        cfg = random_config(rng, random_payoffs(rng))
        report = find_equilibria_general(cfg)
        assert report.equilibria or report.continuum
        assert certify_equilibria(report, cfg)


def test_certification_catches_a_non_equilibrium(canonical, pd):
    report = find_equilibria(pd, 0.0)
    fake = report.model_copy(update={"equilibria": [
        report.equilibria[0].model_copy(update={"profile": StrategyProfile(x=1.0, y=1.0)})
    ]})
    assert not certify_equilibria(fake, canonical.config(0.0, pd))


def test_general_enumeration_agrees_with_embedded(canonical, sh):
    for gamma in GAMMA_GRID[::20]:
        general = find_equilibria_general(canonical.config(gamma, sh))
        embedded = find_equilibria(sh, gamma)
        assert np.allclose(general.profiles(), embedded.profiles(), atol=1e-9)
        assert analyze_config(canonical.config(gamma, sh)).profiles() == embedded.profiles()


def test_degenerate_game_is_flagged():
    payoffs = PayoffMatrix(g00=2.0, g01=1.0, g10=2.0, g11=1.0)
    assert payoffs.deltas().d3 == 0.0
    report = find_equilibria(payoffs, math.pi / 2)
    assert report.continuum
    assert any("degenerate" in note for note in report.notes)


def test_mixed_profile_on_boundary_is_noted():
    # D3 = D1 + D2 puts the indifference point at (1, 1) when gamma = 0
    report = find_equilibria(PayoffMatrix(g00=3.0, g01=1.0, g10=3.0, g11=4.0), 0.0)
    assert not report.mixed()
    assert any("boundary" in note for note in report.notes)


def test_pd_transition_angle(pd):
    estimate = locate_transition(pd)
    assert estimate.analytic == pytest.approx(math.acos(1 / 3), abs=1e-12)
    assert estimate.analytic == pytest.approx(1.230959417, abs=1e-9)
    assert estimate.difference <= 1e-9
    assert pd_transition_angle(pd) == estimate.analytic


def test_transition_separates_equilibrium_regimes(pd):
    angle = pd_transition_angle(pd)
    assert (1.0, 1.0) not in find_equilibria(pd, angle - 1e-6).profiles()
    assert (1.0, 1.0) in find_equilibria(pd, angle + 1e-6).profiles()


def test_transition_boundary_cases():
    # D3 = D1 + D2
    assert locate_transition(PayoffMatrix(g00=3.0, g01=1.0, g10=3.0, g11=4.0)).analytic == 0.0
    # D3 = 0
    boundary = locate_transition(PayoffMatrix(g00=2.0, g01=0.0, g10=3.0, g11=1.0))
    assert boundary.analytic == pytest.approx(math.pi / 2, abs=1e-12)
    assert boundary.difference <= 1e-9


def test_no_transition_for_stag_hunt(sh):
    with pytest.raises(NoTransitionError, match="no transition"):
        locate_transition(sh)


def test_no_transition_when_ratio_is_negative():
    with pytest.raises(NoTransitionError, match="outside"):
        locate_transition(PayoffMatrix(g00=0.0, g01=0.0, g10=5.0, g11=1.0))


def test_classify_game(pd, sh):
    assert classify_game(pd) is GameClass.PRISONERS_DILEMMA
    assert classify_game(sh) is GameClass.STAG_HUNT
    assert classify_game(PayoffMatrix(g00=1.0, g01=1.0, g10=1.0, g11=1.0)) is GameClass.OTHER


def test_gamma_is_range_checked(pd):
    with pytest.raises(DomainError):
        find_equilibria(pd, -0.5)


def test_convention_error_is_arithmetic():
    assert issubclass(ConventionError, ArithmeticError)
    assert GameConfig(payoffs=PayoffMatrix(g00=1, g01=2, g10=3, g11=4)).gamma == 0.0
