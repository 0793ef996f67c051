"""
Conventional two-qubit state-vector oracle.

Kets are complex numpy arrays over |00>, |01>, |10>, |11>. Measurement along direction
kappa projects onto the axis (sin kappa, 0, cos kappa); bit 0 is the +axis outcome.
"""

import math

import numpy as np
from numpy.typing import NDArray

from ..models.game import PlayerParams, check_bit, check_gamma
from ..utils.errors import DomainError

Ket2 = NDArray[np.complex128]
SingleQubitUnitary = NDArray[np.complex128]

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

NORM_TOLERANCE = 1e-12


def _rz(theta: float) -> SingleQubitUnitary:
    return np.array([[np.exp(-0.5j * theta), 0], [0, np.exp(0.5j * theta)]], dtype=complex)


def _ry(theta: float) -> SingleQubitUnitary:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def unitary_from_euler(theta1: float, theta2: float, theta3: float) -> SingleQubitUnitary:
    """exp(-i theta3 Z/2) exp(-i theta1 Y/2) exp(-i theta2 Z/2)."""
    return _rz(theta3) @ _ry(theta1) @ _rz(theta2)


def is_unitary(matrix: SingleQubitUnitary, tolerance: float = NORM_TOLERANCE) -> bool:
    return bool(
        np.allclose(matrix @ matrix.conj().T, IDENTITY, rtol=0.0, atol=tolerance)
        and abs(abs(np.linalg.det(matrix)) - 1.0) <= tolerance
    )


def build_state(gamma: float, alice: PlayerParams, bob: PlayerParams) -> Ket2:
    """(U_A (x) U_B)(cos(gamma/2)|00> + sin(gamma/2)|11>)."""
    gamma = check_gamma(gamma)
    schmidt = np.array([math.cos(gamma / 2), 0.0, 0.0, math.sin(gamma / 2)], dtype=complex)
    local = np.kron(unitary_from_euler(*alice.as_tuple()), unitary_from_euler(*bob.as_tuple()))
    psi = local @ schmidt
    return psi / np.linalg.norm(psi)


def measurement_axis(kappa: float) -> NDArray[np.float64]:
    return np.array([math.sin(kappa), 0.0, math.cos(kappa)])


def projector(bit: int, kappa: float) -> NDArray[np.complex128]:
    """P_bit = (I + (-1)^bit n.sigma) / 2."""
    nx, ny, nz = measurement_axis(kappa)
    spin = nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z
    sign = -1.0 if check_bit("bit", bit) else 1.0
    return 0.5 * (IDENTITY + sign * spin)


def joint_probability(psi: Ket2, m: int, n: int, kappa1: float, kappa2: float) -> float:
    """<psi| P_m(kappa1) (x) P_n(kappa2) |psi>."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (4,):
        raise DomainError(f"two-qubit ket needs 4 amplitudes, got shape {psi.shape}")
    if abs(np.vdot(psi, psi).real - 1.0) > NORM_TOLERANCE:
        raise DomainError("ket is not normalized")
    joint = np.kron(projector(m, kappa1), projector(n, kappa2))
    return float(np.vdot(psi, joint @ psi).real)


def joint_distribution(psi: Ket2, kappa1: float, kappa2: float) -> NDArray[np.float64]:
    """The four probabilities in order 00, 01, 10, 11."""
    return np.array([joint_probability(psi, m, n, kappa1, kappa2) for m in (0, 1) for n in (0, 1)])
