"""
Exception hierarchy for the EPR quantum games engine.
"""


class QuantumGameError(Exception):
    """Base class for every error raised by the engine."""


class DomainError(QuantumGameError, ValueError):
    """An argument lies outside the domain of the operation (gamma, bits, indices, x/y)."""


class ConventionError(QuantumGameError, ArithmeticError):
    """A computed quantity violates a convention, e.g. a probability outside [0, 1]."""


class ConfigError(QuantumGameError, ValueError):
    """A game-config file or preset could not be turned into a valid game."""


class NoTransitionError(QuantumGameError, ValueError):
    """The game has no entanglement phase transition inside [0, pi/2]."""


class GameClassError(QuantumGameError, ValueError):
    """The payoff matrix does not satisfy the preconditions of a game class."""
