"""
EPR Quantum Games
Two-player quantum games in the EPR setting, computed with Cl(3,0) geometric algebra.

Cross-checked against a conventional state-vector simulation.
"""

__version__ = "0.1.0"
__description__ = "Entanglement-dependent Nash equilibria of symmetric 2x2 games via geometric algebra"
