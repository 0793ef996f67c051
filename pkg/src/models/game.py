"""
Domain models for the EPR quantum games engine.

Parameter records are frozen pydantic models so they can be shared freely between
threads during sweeps; result records reuse the same base for JSON output.
"""

import math
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, field_validator, model_validator

from ..utils.errors import DomainError

GAMMA_MAX = math.pi / 2
DISTRIBUTION_TOLERANCE = 1e-12


def check_gamma(gamma: float) -> float:
    """Return gamma if it lies in [0, pi/2], otherwise raise DomainError."""
    if not (math.isfinite(gamma) and 0.0 <= gamma <= GAMMA_MAX):
        raise DomainError(f"entanglement angle gamma={gamma!r} outside [0, pi/2]")
    return float(gamma)


def check_bit(name: str, value: int) -> int:
    if value not in (0, 1):
        raise DomainError(f"outcome bit {name}={value!r} must be 0 or 1")
    return int(value)


def check_direction_index(name: str, value: int) -> int:
    if value not in (1, 2):
        raise DomainError(f"direction index {name}={value!r} must be 1 or 2")
    return int(value)


def check_mixing(name: str, value: float) -> float:
    if not (math.isfinite(value) and 0.0 <= value <= 1.0):
        raise DomainError(f"mixing probability {name}={value!r} outside [0, 1]")
    return float(value)


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class PlayerParams(_Frozen):
    """Euler angles (radians) of a player's rotor, R(e1, e2, e3)."""
    e1: FiniteFloat = 0.0
    e2: FiniteFloat = 0.0
    e3: FiniteFloat = 0.0

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.e1, self.e2, self.e3)


class DirectionPair(_Frozen):
    """A player's two available measurement directions kappa_1, kappa_2 (radians)."""
    k1: FiniteFloat = 0.0
    k2: FiniteFloat = math.pi

    def angle(self, index: int) -> float:
        """Direction for the 1-based strategy index."""
        return self.k1 if check_direction_index("index", index) == 1 else self.k2


class Deltas(_Frozen):
    """Payoff differences that drive the equilibrium structure."""
    d1: float
    d2: float
    d3: float
    d4: float


class PayoffMatrix(_Frozen):
    """Alice's payoff matrix; Bob's is its transpose."""
    g00: FiniteFloat
    g01: FiniteFloat
    g10: FiniteFloat
    g11: FiniteFloat

    @classmethod
    def from_sequence(cls, values) -> "PayoffMatrix":
        g00, g01, g10, g11 = (float(v) for v in values)
        return cls(g00=g00, g01=g01, g10=g10, g11=g11)

    def entry(self, m: int, n: int) -> float:
        return (self.g00, self.g01, self.g10, self.g11)[2 * check_bit("m", m) + check_bit("n", n)]

    def transpose(self) -> "PayoffMatrix":
        return PayoffMatrix(g00=self.g00, g01=self.g10, g10=self.g01, g11=self.g11)

    def total(self) -> float:
        return self.g00 + self.g01 + self.g10 + self.g11

    def deltas(self) -> Deltas:
        d1 = self.g10 - self.g00
        d2 = self.g11 - self.g01
        return Deltas(d1=d1, d2=d2, d3=d2 - d1, d4=self.g00 - self.g01 + self.g10 - self.g11)


class GameConfig(_Frozen):
    """Full parameter set: payoffs, player rotors, measurement directions and gamma."""
    payoffs: PayoffMatrix
    alice: PlayerParams = PlayerParams()
    bob: PlayerParams = PlayerParams()
    alice_directions: DirectionPair = DirectionPair()
    bob_directions: DirectionPair = DirectionPair()
    gamma: float = 0.0

    @field_validator("gamma")
    @classmethod
    def _gamma_in_range(cls, value: float) -> float:
        return check_gamma(value)

    def with_gamma(self, gamma: float) -> "GameConfig":
        return self.model_copy(update={"gamma": check_gamma(gamma)})

    def swap_players(self) -> "GameConfig":
        """The same game seen from Bob's side: Alice's and Bob's parameters exchanged."""
        return self.model_copy(update={
            "alice": self.bob,
            "bob": self.alice,
            "alice_directions": self.bob_directions,
            "bob_directions": self.alice_directions,
        })


class OutcomeDistribution(_Frozen):
    """Probabilities of the four outcomes for one direction pair (i, j)."""
    p00: float
    p01: float
    p10: float
    p11: float

    @model_validator(mode="after")
    def _is_a_distribution(self) -> "OutcomeDistribution":
        for value in self.as_tuple():
            if not -DISTRIBUTION_TOLERANCE <= value <= 1.0 + DISTRIBUTION_TOLERANCE:
                raise DomainError(f"outcome probability {value!r} outside [0, 1]")
        if abs(self.total - 1.0) > DISTRIBUTION_TOLERANCE:
            raise DomainError(f"outcome probabilities sum to {self.total!r}, not 1")
        return self

    def get(self, m: int, n: int) -> float:
        return self.as_tuple()[2 * check_bit("m", m) + check_bit("n", n)]

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.p00, self.p01, self.p10, self.p11)

    @property
    def total(self) -> float:
        return math.fsum(self.as_tuple())


class StrategyProfile(_Frozen):
    """Probabilities x, y of choosing the first measurement direction."""
    x: float = Field(ge=0.0, le=1.0)
    y: float = Field(ge=0.0, le=1.0)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.x, self.y)


class EquilibriumKind(Enum):
    """Whether an equilibrium profile is pure or mixed."""
    PURE = "pure"
    MIXED = "mixed"


class Equilibrium(_Frozen):
    profile: StrategyProfile
    payoff_a: float
    payoff_b: float
    kind: EquilibriumKind
    strict: bool


class EquilibriumReport(_Frozen):
    """Nash equilibria of a game at one entanglement angle."""
    gamma: float
    equilibria: List[Equilibrium] = Field(default_factory=list)
    continuum: bool = False
    notes: List[str] = Field(default_factory=list)

    def profiles(self) -> List[Tuple[float, float]]:
        return [eq.profile.as_tuple() for eq in self.equilibria]

    def pure(self) -> List[Equilibrium]:
        return [eq for eq in self.equilibria if eq.kind is EquilibriumKind.PURE]

    def mixed(self) -> List[Equilibrium]:
        return [eq for eq in self.equilibria if eq.kind is EquilibriumKind.MIXED]


class EmbeddingClass(Enum):
    """The two solution families of the classical-embedding constraints."""
    ALPHA3_FREE = "alpha3-free"
    ALPHA3_ZERO = "alpha3-zero"


class PlayerEmbedding(_Frozen):
    embedding_class: EmbeddingClass
    params: PlayerParams
    directions: DirectionPair
    free_angles: Dict[str, float]


class EmbeddingSolution(_Frozen):
    """Parameters satisfying X1 = Y1 = +1, X2 = Y2 = -1 and Z_ij = 0."""
    payoffs: Optional[PayoffMatrix] = None
    alice: PlayerEmbedding
    bob: PlayerEmbedding

    def config(self, gamma: float, payoffs: Optional[PayoffMatrix] = None) -> GameConfig:
        matrix = payoffs or self.payoffs
        if matrix is None:
            raise DomainError("a payoff matrix is required to build a game configuration")
        return GameConfig(
            payoffs=matrix,
            alice=self.alice.params,
            bob=self.bob.params,
            alice_directions=self.alice.directions,
            bob_directions=self.bob.directions,
            gamma=gamma,
        )


class GameClass(Enum):
    PRISONERS_DILEMMA = "prisoners-dilemma"
    STAG_HUNT = "stag-hunt"
    OTHER = "other"


class TransitionEstimate(_Frozen):
    """Entanglement angle of the PD phase transition, computed two ways."""
    analytic: float
    bisection: float

    @property
    def difference(self) -> float:
        return abs(self.analytic - self.bisection)


class SweepRow(_Frozen):
    """One equilibrium at one sampled gamma of a sweep."""
    gamma: float
    x_star: float
    y_star: float
    payoff_a: float
    payoff_b: float
    kind: EquilibriumKind
    strict: bool


class VerificationReport(_Frozen):
    """Outcome of comparing the GA, closed-form and oracle probability pipelines."""
    samples: int
    seed: int
    tolerance: float
    max_deviation: Dict[str, float]
    passed: bool
    first_failure: Optional[dict] = None
