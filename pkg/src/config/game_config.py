"""
Game-config files and presets.

A game config is flat KEY=VALUE text (comments start with #), read with python-dotenv:

    PAYOFF_G00=3          # Alice's payoff matrix, required
    PAYOFF_G01=0
    PAYOFF_G10=4
    PAYOFF_G11=2
    BOB_PAYOFF_H00=3      # optional; must be the transpose of Alice's matrix
    ALICE_ANGLES=0,0,0    # e1,e2,e3
    BOB_ANGLES=0,pi/4,0
    ALICE_DIRECTIONS=0,pi # kappa_1,kappa_2
    BOB_DIRECTIONS=0,180deg
    GAMMA=pi/2

Angles are radians, multiples of pi (pi/2, -3pi/4, 2*pi/3) or degrees with a deg suffix.
Omitted angles and directions default to the canonical embedding solution.
"""

import math
import re
from pathlib import Path
from typing import Dict, Optional, Tuple

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..models.game import DirectionPair, GameConfig, PayoffMatrix, PlayerParams, check_gamma
from ..utils.errors import ConfigError
from ..utils.logging import get_logger

logger = get_logger(__name__)

PRESETS: Dict[str, PayoffMatrix] = {
    "pd-paper": PayoffMatrix(g00=3.0, g01=0.0, g10=4.0, g11=2.0),
    "sh-paper": PayoffMatrix(g00=10.0, g01=0.0, g10=8.0, g11=7.0),
}

_ENTRIES = ("00", "01", "10", "11")
PAYOFF_KEYS = tuple(f"PAYOFF_G{e}" for e in _ENTRIES)
BOB_PAYOFF_KEYS = tuple(f"BOB_PAYOFF_H{e}" for e in _ENTRIES)
KNOWN_KEYS = frozenset(
    PAYOFF_KEYS + BOB_PAYOFF_KEYS
    + ("ALICE_ANGLES", "BOB_ANGLES", "ALICE_DIRECTIONS", "BOB_DIRECTIONS", "GAMMA")
)

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_PI_PATTERN = re.compile(rf"^(?P<sign>[+-]?)(?P<coef>{_NUMBER})?\s*\*?\s*pi(?:\s*/\s*(?P<den>{_NUMBER}))?$")
_DEG_PATTERN = re.compile(rf"^(?P<value>[+-]?{_NUMBER})\s*deg$")


def parse_angle(text: str) -> float:
    """
    Parse one angle into radians.

    Raises:
        ConfigError: for malformed or non-finite values
    """
    token = text.strip().lower()
    match = _PI_PATTERN.match(token)
    if match:
        coefficient = float(match["coef"]) if match["coef"] else 1.0
        denominator = float(match["den"]) if match["den"] else 1.0
        if denominator == 0:
            raise ConfigError(f"angle {text!r} divides by zero")
        value = coefficient * math.pi / denominator
        return -value if match["sign"] == "-" else value
    match = _DEG_PATTERN.match(token)
    if match:
        value = math.radians(float(match["value"]))
    else:
        try:
            value = float(token)
        except ValueError:
            raise ConfigError(f"malformed angle {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"angle {text!r} is not finite")
    return value


def parse_angles(text: str, count: int, key: str) -> Tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise ConfigError(f"{key} needs {count} comma-separated angles, got {len(parts)}")
    return tuple(parse_angle(part) for part in parts)


def _parse_number(key: str, text: str) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: malformed number {text!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"{key}: payoff must be finite, got {text!r}")
    return value


class GameConfigFile(BaseModel):
    """Validated contents of a game-config file."""
    model_config = ConfigDict(frozen=True)

    payoffs: PayoffMatrix = Field(description="Alice's payoff matrix")
    bob_payoffs: Optional[PayoffMatrix] = Field(default=None, description="Bob's matrix, if stated")
    alice_angles: Tuple[float, float, float] = Field(default=(0.0, 0.0, 0.0), description="Alice's Euler angles")
    bob_angles: Tuple[float, float, float] = Field(default=(0.0, 0.0, 0.0), description="Bob's Euler angles")
    alice_directions: Tuple[float, float] = Field(default=(0.0, math.pi), description="Alice's directions")
    bob_directions: Tuple[float, float] = Field(default=(0.0, math.pi), description="Bob's directions")
    gamma: float = Field(default=0.0, description="Entanglement angle")

    @model_validator(mode="after")
    def _symmetric_game(self) -> "GameConfigFile":
        if self.bob_payoffs is not None and self.bob_payoffs != self.payoffs.transpose():
            raise ValueError("only symmetric games are supported: Bob's matrix must be the transpose of Alice's")
        check_gamma(self.gamma)
        return self

    @classmethod
    def from_values(cls, values: Dict[str, Optional[str]]) -> "GameConfigFile":
        """Build from parsed KEY=VALUE pairs."""
        unknown = sorted(set(values) - KNOWN_KEYS)
        if unknown:
            raise ConfigError(f"unknown keys: {', '.join(unknown)}")
        missing = [key for key in PAYOFF_KEYS if values.get(key) in (None, "")]
        if missing:
            raise ConfigError(f"missing payoff entries: {', '.join(missing)}")

        fields = {"payoffs": PayoffMatrix.from_sequence(_parse_number(k, values[k]) for k in PAYOFF_KEYS)}
        present_bob = [key for key in BOB_PAYOFF_KEYS if key in values]
        if present_bob:
            if len(present_bob) != len(BOB_PAYOFF_KEYS):
                raise ConfigError("BOB_PAYOFF_H00..H11 must be given together")
            fields["bob_payoffs"] = PayoffMatrix.from_sequence(_parse_number(k, values[k]) for k in BOB_PAYOFF_KEYS)
        for key, count in (("ALICE_ANGLES", 3), ("BOB_ANGLES", 3), ("ALICE_DIRECTIONS", 2), ("BOB_DIRECTIONS", 2)):
            if values.get(key):
                fields[key.lower()] = parse_angles(values[key], count, key)
        if values.get("GAMMA"):
            fields["gamma"] = parse_angle(values["GAMMA"])

        try:
            return cls(**fields)
        except ValidationError as e:
            raise ConfigError(f"invalid game config: {e.errors()[0]['msg']}") from None

    def to_game(self) -> GameConfig:
        return GameConfig(
            payoffs=self.payoffs,
            alice=PlayerParams(e1=self.alice_angles[0], e2=self.alice_angles[1], e3=self.alice_angles[2]),
            bob=PlayerParams(e1=self.bob_angles[0], e2=self.bob_angles[1], e3=self.bob_angles[2]),
            alice_directions=DirectionPair(k1=self.alice_directions[0], k2=self.alice_directions[1]),
            bob_directions=DirectionPair(k1=self.bob_directions[0], k2=self.bob_directions[1]),
            gamma=self.gamma,
        )


def load_game_config_file(path: str) -> GameConfigFile:
    config_path = Path(path)
    if not config_path.is_file():
        raise ConfigError(f"game config not found: {path}")
    try:
        values = dotenv_values(config_path, interpolate=False)
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError(f"cannot read game config {path}: {e}") from None
    logger.debug(f"Read {len(values)} keys from {config_path}")
    return GameConfigFile.from_values(values)


def load_game(config_path: Optional[str] = None, preset: Optional[str] = None, gamma: Optional[float] = None) -> GameConfig:
    """
    Resolve a game from exactly one of a config file or a preset, with optional gamma override.

    Raises:
        ConfigError: for a missing, unreadable or invalid source
    """
    if (config_path is None) == (preset is None):
        raise ConfigError("give exactly one of --config or --preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"unknown preset {preset!r}; choose from {', '.join(PRESETS)}")
        game = GameConfig(payoffs=PRESETS[preset])
    else:
        game = load_game_config_file(config_path).to_game()
    return game if gamma is None else game.with_gamma(gamma)
