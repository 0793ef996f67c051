"""
Cross-formalism verification of the outcome probabilities.

Each sampled configuration is evaluated three ways: the multivector expression on
psi = A B (cos(g/2) + sin(g/2) i s2 i s2), the closed-form P_mn, and the complex
state-vector oracle. Every pair must agree within the tolerance.
"""

import math
from itertools import combinations
from typing import Dict, Optional

import numpy as np

from ..algebra.measurement import StateProjections, outcome_spinors, two_particle_state
from ..algebra.rotors import rotor_from_euler
from ..config.settings import config
from ..engine.probabilities import DIRECTION_PAIRS, OUTCOMES, outcome_probability
from ..models.game import (
    GAMMA_MAX,
    DirectionPair,
    GameConfig,
    PayoffMatrix,
    PlayerParams,
    VerificationReport,
)
from ..oracle.statevector import build_state, joint_probability
from ..utils.errors import DomainError
from ..utils.logging import get_logger

logger = get_logger(__name__)

PIPELINES = ("ga", "closed_form", "oracle")
_PLACEHOLDER_PAYOFFS = PayoffMatrix(g00=0.0, g01=0.0, g10=0.0, g11=0.0)


def random_config(rng: np.random.Generator) -> GameConfig:
    """Uniform Euler angles and directions in [0, 2pi), gamma uniform in [0, pi/2]."""
    angles = rng.uniform(0.0, 2 * math.pi, size=10)
    gamma = float(rng.uniform(0.0, GAMMA_MAX))
    return GameConfig(
        payoffs=_PLACEHOLDER_PAYOFFS,
        alice=PlayerParams(e1=angles[0], e2=angles[1], e3=angles[2]),
        bob=PlayerParams(e1=angles[3], e2=angles[4], e3=angles[5]),
        alice_directions=DirectionPair(k1=angles[6], k2=angles[7]),
        bob_directions=DirectionPair(k1=angles[8], k2=angles[9]),
        gamma=gamma,
    )


def pipeline_probabilities(cfg: GameConfig) -> Dict[str, np.ndarray]:
    """
    All 16 probabilities (direction pair major, outcome minor) from each pipeline.

    Range checks are disabled so that out-of-range values surface as deviations.
    """
    psi_ga = StateProjections.of(two_particle_state(
        rotor_from_euler(*cfg.alice.as_tuple()),
        rotor_from_euler(*cfg.bob.as_tuple()),
        cfg.gamma,
    ))
    psi_ket = build_state(cfg.gamma, cfg.alice, cfg.bob)

    values = {name: [] for name in PIPELINES}
    for i, j in DIRECTION_PAIRS:
        kappa1 = cfg.alice_directions.angle(i)
        kappa2 = cfg.bob_directions.angle(j)
        for m, n in OUTCOMES:
            values["ga"].append(psi_ga.probability(outcome_spinors(m, n, kappa1, kappa2), tolerance=math.inf))
            values["closed_form"].append(outcome_probability(m, n, i, j, cfg, tolerance=math.inf))
            values["oracle"].append(joint_probability(psi_ket, m, n, kappa1, kappa2))
    return {name: np.array(series) for name, series in values.items()}


class CrossFormalismVerifier:
    """Seeded comparison of the three probability pipelines."""

    def __init__(self, samples: Optional[int] = None, seed: Optional[int] = None, tolerance: Optional[float] = None):
        self.samples = config.verify.samples if samples is None else samples
        self.seed = config.verify.seed if seed is None else seed
        self.tolerance = config.verify.tolerance if tolerance is None else tolerance
        if self.samples < 1:
            raise DomainError(f"samples must be at least 1, got {self.samples}")
        if self.tolerance < 0:
            raise DomainError(f"tolerance must be non-negative, got {self.tolerance}")

    def run(self) -> VerificationReport:
        logger.info(f"Verifying {self.samples} samples (seed={self.seed}, tol={self.tolerance:g})")
        rng = np.random.default_rng(self.seed)
        max_deviation = {f"{a}_vs_{b}": 0.0 for a, b in combinations(PIPELINES, 2)}
        first_failure = None

        for sample in range(self.samples):
            cfg = random_config(rng)
            values = pipeline_probabilities(cfg)
            for a, b in combinations(PIPELINES, 2):
                deviations = np.abs(values[a] - values[b])
                worst = float(deviations.max())
                key = f"{a}_vs_{b}"
                max_deviation[key] = max(max_deviation[key], worst)
                if first_failure is None and worst > self.tolerance:
                    index = int(deviations.argmax())
                    first_failure = self._failure_record(sample, cfg, values, index, key, worst)
                    logger.warning(f"Sample {sample} exceeds tolerance: {key} deviates by {worst:.3g}")

        report = VerificationReport(
            samples=self.samples,
            seed=self.seed,
            tolerance=self.tolerance,
            max_deviation=max_deviation,
            passed=first_failure is None,
            first_failure=first_failure,
        )
        logger.info(f"Verification {'passed' if report.passed else 'failed'}: {max_deviation}")
        return report

    @staticmethod
    def _failure_record(sample: int, cfg: GameConfig, values, index: int, pair: str, deviation: float) -> dict:
        i, j = DIRECTION_PAIRS[index // 4]
        m, n = OUTCOMES[index % 4]
        return {
            "sample": sample,
            "pair": pair,
            "deviation": deviation,
            "direction_pair": [i, j],
            "outcome": [m, n],
            "values": {name: float(series[index]) for name, series in values.items()},
            "config": cfg.model_dump(exclude={"payoffs"}),
        }


def create_verifier(**kwargs) -> CrossFormalismVerifier:
    return CrossFormalismVerifier(**kwargs)
