"""
Two-particle states, the E/J observables and the GA measurement probability.

For two particles the probability that psi is found in the separable state phi is
    P = <psi E psi† phi E phi†>_0 - <psi J psi† phi J phi†>_0
with E = (1 - i s3^1 i s3^2)/2 and J = (i s3^1 + i s3^2)/2.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ..config.settings import config
from ..models.game import check_bit, check_gamma
from ..utils.errors import ConventionError
from .multivector import (
    IOTA_SIGMA,
    PAIR_REVERSION_SIGNS,
    PAIR_SQUARE_SIGNS,
    PAIR_STRUCTURE,
    TwoParticleMultivector,
    scalar_product,
)
from .rotors import Rotor, bivector_exponential


def _pair(first, second) -> TwoParticleMultivector:
    return TwoParticleMultivector.from_factors(first, second)


def _correlated(axis: int) -> TwoParticleMultivector:
    """i s_axis^1 i s_axis^2."""
    return _pair(IOTA_SIGMA[axis - 1], IOTA_SIGMA[axis - 1])


_ONE = TwoParticleMultivector.scalar(1.0)
_E = 0.5 * (_ONE - _correlated(3))
_J = 0.5 * (
    TwoParticleMultivector.particle(IOTA_SIGMA[2], 1) + TwoParticleMultivector.particle(IOTA_SIGMA[2], 2)
)


def observables_EJ() -> Tuple[TwoParticleMultivector, TwoParticleMultivector]:
    """The fixed two-particle observables (E, J)."""
    return _E, _J


def two_particle_state(alice: Rotor, bob: Rotor, gamma: float) -> TwoParticleMultivector:
    """
    psi = A B (cos(gamma/2) + sin(gamma/2) i s2^1 i s2^2).

    Args:
        alice: Rotor acting on particle 1
        bob: Rotor acting on particle 2
        gamma: Entanglement angle in [0, pi/2]

    Returns:
        The two-particle state multivector
    """
    gamma = check_gamma(gamma)
    entangler = math.cos(gamma / 2) * _ONE + math.sin(gamma / 2) * _correlated(2)
    return _pair(alice.value, bob.value) * entangler


def psi_E_psi(psi: TwoParticleMultivector) -> TwoParticleMultivector:
    return psi * _E * psi.reverse()


def psi_J_psi(psi: TwoParticleMultivector) -> TwoParticleMultivector:
    return psi * _J * psi.reverse()


def measurement_spinors(kappa1: float, kappa2: float) -> TwoParticleMultivector:
    """
    phi = R S with R = exp(-i kappa1 s2^1), S = exp(-i kappa2 s2^2).

    The full angle sits in the exponent, so the Bloch direction measured is 2*kappa.
    """
    return _pair(bivector_exponential(kappa1, 2), bivector_exponential(kappa2, 2))


def outcome_spinors(m: int, n: int, kappa1: float, kappa2: float) -> TwoParticleMultivector:
    """
    Separable state for outcome (m, n) along Bloch polar angles kappa1, kappa2.

    The |1> outcome is the measurement rotor times -i s2 = exp(-i (pi/2) s2), which
    turns the axis by pi; the rotor for Bloch angle kappa has exponent kappa/2.
    """
    m, n = check_bit("m", m), check_bit("n", n)
    return measurement_spinors((kappa1 + m * math.pi) / 2, (kappa2 + n * math.pi) / 2)


def _in_unit_interval(probability: float, tolerance: Optional[float]) -> float:
    if tolerance is None:
        tolerance = config.tolerances.oracle
    if not -tolerance <= probability <= 1.0 + tolerance:
        raise ConventionError(f"GA probability {probability!r} outside [0, 1]")
    return probability


def probability_ga(
    psi: TwoParticleMultivector,
    phi: TwoParticleMultivector,
    tolerance: Optional[float] = None,
) -> float:
    """
    Probability that psi returns the separable state phi (two particles, prefactor 1).

    Raises:
        ConventionError: if the value falls outside [-tol, 1 + tol]
    """
    correlation = scalar_product(psi_E_psi(psi), phi * _E * phi.reverse())
    current = scalar_product(psi_J_psi(psi), phi * _J * phi.reverse())
    return _in_unit_interval(correlation - current, tolerance)


def _sandwich(middle: TwoParticleMultivector) -> np.ndarray:
    """[a, b, :] holds the coefficients of e_a middle e_b† over the 64 basis pairs."""
    left = np.einsum("c,acw->aw", middle.coefficients.ravel(), PAIR_STRUCTURE)
    full = (left @ PAIR_STRUCTURE.reshape(64, 64 * 64)).reshape(64, 64, 64)
    return full * PAIR_REVERSION_SIGNS.reshape(1, 64, 1)


_E_SANDWICH = _sandwich(_E)
_J_SANDWICH = _sandwich(_J)


@dataclass(frozen=True)
class StateProjections:
    """
    psi E psi† and psi J psi† for one state, reused across measurement spinors.

    For fixed psi the probability is a quadratic form in phi's 64 coefficients;
    `form` holds its matrix.
    """
    correlation: TwoParticleMultivector
    current: TwoParticleMultivector
    form: np.ndarray = field(repr=False, compare=False)

    @classmethod
    def of(cls, psi: TwoParticleMultivector) -> "StateProjections":
        correlation, current = psi_E_psi(psi), psi_J_psi(psi)
        form = (
            _E_SANDWICH @ (PAIR_SQUARE_SIGNS * correlation.coefficients).ravel()
            - _J_SANDWICH @ (PAIR_SQUARE_SIGNS * current.coefficients).ravel()
        )
        return cls(correlation, current, form)

    def probability(self, phi: TwoParticleMultivector, tolerance: Optional[float] = None) -> float:
        coefficients = phi.coefficients.ravel()
        return _in_unit_interval(float(coefficients @ self.form @ coefficients), tolerance)
