"""
Measurement-direction functions X, Y, F, G, U, V and Z.

Each takes a measurement direction kappa (the Bloch polar angle in the s1-s3 plane) and a
player's Euler angles. Bob's functions are Alice's evaluated on the beta triple.
"""

import math
from typing import Tuple

from ..models.game import PlayerParams


def x_fn(kappa: float, alice: PlayerParams) -> float:
    """X(kappa) = cos a1 cos kappa + cos a3 sin a1 sin kappa."""
    return math.cos(alice.e1) * math.cos(kappa) + math.cos(alice.e3) * math.sin(alice.e1) * math.sin(kappa)


def y_fn(kappa: float, bob: PlayerParams) -> float:
    return x_fn(kappa, bob)


def fguv_fns(kappa: float, player: PlayerParams) -> Tuple[float, float]:
    """
    (F, U) for Alice's triple, or (G, V) for Bob's.

    F = cos e2 (cos k sin e1 - cos e3 sin k cos e1) + sin k sin e2 sin e3
    U = -sin e2 (cos k sin e1 - cos e3 sin k cos e1) + sin k cos e2 sin e3
    """
    e1, e2, e3 = player.as_tuple()
    tilt = math.cos(kappa) * math.sin(e1) - math.cos(e3) * math.sin(kappa) * math.cos(e1)
    twist = math.sin(kappa) * math.sin(e3)
    f = math.cos(e2) * tilt + math.sin(e2) * twist
    u = -math.sin(e2) * tilt + math.cos(e2) * twist
    return f, u


def gv_fns(kappa: float, bob: PlayerParams) -> Tuple[float, float]:
    return fguv_fns(kappa, bob)


def z_fn(kappa1: float, kappa2: float, alice: PlayerParams, bob: PlayerParams) -> float:
    """Z = F(kappa1) G(kappa2) - U(kappa1) V(kappa2)."""
    f, u = fguv_fns(kappa1, alice)
    g, v = gv_fns(kappa2, bob)
    return f * g - u * v


def z_expanded(kappa1: float, kappa2: float, alice: PlayerParams, bob: PlayerParams) -> float:
    """
    Trigonometric expansion of Z with phi = a2 + b2.

    Diagnostic only; z_fn is authoritative. The sin(k1) sin(k2) term of the sin(phi)
    bracket enters with a minus sign.
    """
    a1, a2, a3 = alice.as_tuple()
    b1, b2, b3 = bob.as_tuple()
    phi = a2 + b2
    c1, s1 = math.cos(kappa1), math.sin(kappa1)
    c2, s2 = math.cos(kappa2), math.sin(kappa2)

    in_phase = (
        c1 * c2 * math.sin(b1) * math.sin(a1)
        - s1 * c2 * math.sin(b1) * math.cos(a1) * math.cos(a3)
        + s1 * s2 * (math.cos(a1) * math.cos(a3) * math.cos(b1) * math.cos(b3) - math.sin(a3) * math.sin(b3))
        - c1 * s2 * math.sin(a1) * math.cos(b1) * math.cos(b3)
    )
    quadrature = (
        s1 * c2 * math.sin(a3) * math.sin(b1)
        + c1 * s2 * math.sin(a1) * math.sin(b3)
        - s1 * s2 * (math.cos(b1) * math.cos(b3) * math.sin(a3) + math.cos(a1) * math.cos(a3) * math.sin(b3))
    )
    return math.cos(phi) * in_phase + math.sin(phi) * quadrature
