"""
Rotors, spinors and the one-qubit spinor map.

A one-qubit state a0 + a1 i s1 + a2 i s2 + a3 i s3 corresponds to the ket
(a0 + i a3, -a2 + i a1); rotors act on it by left multiplication.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..utils.errors import DomainError
from .multivector import IOTA_SIGMA, ONE, Multivector3

ROTOR_TOLERANCE = 1e-12


def bivector_exponential(angle: float, axis: int) -> Multivector3:
    """exp(-angle * i s_axis) = cos(angle) - sin(angle) i s_axis, for axis in {1, 2, 3}."""
    return math.cos(angle) * ONE - math.sin(angle) * IOTA_SIGMA[axis - 1]


@dataclass(frozen=True)
class Rotor:
    """Unit even-grade multivector implementing a rotation; R R† = 1."""
    value: Multivector3
    euler: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        if not self.value.is_even(ROTOR_TOLERANCE):
            raise DomainError(f"rotor must be even-grade, got {self.value!r}")
        residual = self.value * self.value.reverse() - ONE
        if not residual.is_close(0.0, 1e-9):
            raise DomainError(f"rotor is not normalized: R R~ - 1 = {residual!r}")

    def reverse(self) -> "Rotor":
        return Rotor(self.value.reverse())

    def apply(self, element: Multivector3) -> Multivector3:
        """Rotate an element: R x R†."""
        return self.value * element * self.value.reverse()

    def __mul__(self, other: "Rotor") -> "Rotor":
        if isinstance(other, Rotor):
            return Rotor(self.value * other.value)
        return NotImplemented


IDENTITY_ROTOR = Rotor(ONE, (0.0, 0.0, 0.0))


def rotor_from_euler(theta1: float, theta2: float, theta3: float) -> Rotor:
    """
    R(theta1, theta2, theta3) = exp(-theta3 i s3/2) exp(-theta1 i s2/2) exp(-theta2 i s3/2).

    Args:
        theta1: Rotation about s2 (radians)
        theta2: First rotation about s3 (radians)
        theta3: Last rotation about s3 (radians)

    Returns:
        Rotor carrying its generating Euler triple
    """
    angles = (float(theta1), float(theta2), float(theta3))
    if not all(math.isfinite(a) for a in angles):
        raise DomainError(f"Euler angles must be finite, got {angles}")
    value = (
        bivector_exponential(theta3 / 2, 3)
        * bivector_exponential(theta1 / 2, 2)
        * bivector_exponential(theta2 / 2, 3)
    )
    return Rotor(value, angles)


@dataclass(frozen=True)
class Spinor:
    """Even-subalgebra coordinates of a one-qubit state."""
    a0: float
    a1: float
    a2: float
    a3: float

    @property
    def norm_squared(self) -> float:
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def is_normalized(self, tolerance: float = ROTOR_TOLERANCE) -> bool:
        return abs(self.norm_squared - 1.0) <= tolerance

    def to_multivector(self) -> Multivector3:
        i_s1, i_s2, i_s3 = IOTA_SIGMA
        return self.a0 * ONE + self.a1 * i_s1 + self.a2 * i_s2 + self.a3 * i_s3

    @classmethod
    def from_multivector(cls, element: Multivector3) -> "Spinor":
        if not element.is_even(ROTOR_TOLERANCE):
            raise DomainError(f"spinor must be even-grade, got {element!r}")
        # i s_k is a unit bivector, so its coordinate is <(i s_k)† psi>_0
        coords = [(axis.reverse() * element).scalar_part for axis in IOTA_SIGMA]
        return cls(element.scalar_part, *coords)


def spinor_to_ket(spinor: Spinor) -> np.ndarray:
    """(a0 + i a3, -a2 + i a1)."""
    return np.array([complex(spinor.a0, spinor.a3), complex(-spinor.a2, spinor.a1)])


def ket_to_spinor(ket) -> Spinor:
    alpha, beta = (complex(v) for v in ket)
    return Spinor(alpha.real, beta.imag, -beta.real, alpha.imag)
