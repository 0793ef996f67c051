"""
Geometric-algebra kernel for the EPR quantum games engine.
"""

from .measurement import observables_EJ, outcome_spinors, probability_ga, two_particle_state
from .multivector import Multivector3, TwoParticleMultivector, geometric_product, reverse, scalar_product
from .rotors import Rotor, Spinor, rotor_from_euler

__all__ = [
    "Multivector3",
    "TwoParticleMultivector",
    "geometric_product",
    "reverse",
    "scalar_product",
    "Rotor",
    "Spinor",
    "rotor_from_euler",
    "observables_EJ",
    "outcome_spinors",
    "probability_ga",
    "two_particle_state",
]
