"""
Tests for game-config files, presets and the angle grammar.
"""

import math

import pytest

from src.config.game_config import PRESETS, GameConfigFile, load_game, load_game_config_file, parse_angle
from src.models.game import DirectionPair, PlayerParams
from src.utils.errors import ConfigError, DomainError

PD_TEXT = """\
# prisoners' dilemma
PAYOFF_G00=3
PAYOFF_G01=0
PAYOFF_G10=4
PAYOFF_G11=2
"""


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1.5", 1.5),
        ("-0.25", -0.25),
        ("pi", math.pi),
        ("-pi", -math.pi),
        ("pi/2", math.pi / 2),
        ("-3pi/4", -3 * math.pi / 4),
        ("2*pi/3", 2 * math.pi / 3),
        ("90deg", math.pi / 2),
        ("-45 deg", -math.pi / 4),
        (" PI/4 ", math.pi / 4),
    ],
)
def test_parse_angle(text, expected):
    assert parse_angle(text) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("text", ["", "abc", "pi/0", "nan", "inf", "1.2.3", "deg"])
def test_parse_angle_rejects_malformed_values(text):
    with pytest.raises(ConfigError):
        parse_angle(text)


def test_presets():
    assert PRESETS["pd-paper"].model_dump() == {"g00": 3.0, "g01": 0.0, "g10": 4.0, "g11": 2.0}
    assert PRESETS["sh-paper"].model_dump() == {"g00": 10.0, "g01": 0.0, "g10": 8.0, "g11": 7.0}


def test_minimal_file_defaults_to_canonical_embedding(tmp_path):
    path = tmp_path / "pd.env"
    path.write_text(PD_TEXT)
    game = load_game(config_path=str(path))
    assert game.payoffs == PRESETS["pd-paper"]
    assert game.alice == PlayerParams() and game.bob == PlayerParams()
    assert game.alice_directions == DirectionPair(k1=0.0, k2=math.pi)
    assert game.gamma == 0.0


def test_full_file(tmp_path):
    path = tmp_path / "game.env"
    path.write_text(
        PD_TEXT
        + "BOB_PAYOFF_H00=3\nBOB_PAYOFF_H01=4\nBOB_PAYOFF_H10=0\nBOB_PAYOFF_H11=2\n"
        + "ALICE_ANGLES=0,pi/4,0.5\nBOB_ANGLES=0, 0, 90deg\n"
        + "ALICE_DIRECTIONS=0,pi\nBOB_DIRECTIONS=pi,0\n"
        + "GAMMA=pi/2  # maximal entanglement\n"
    )
    game = load_game_config_file(str(path)).to_game()
    assert game.alice.as_tuple() == pytest.approx((0.0, math.pi / 4, 0.5))
    assert game.bob.e3 == pytest.approx(math.pi / 2)
    assert game.bob_directions.k1 == pytest.approx(math.pi)
    assert game.gamma == pytest.approx(math.pi / 2)


def test_gamma_override(tmp_path):
    assert load_game(preset="sh-paper", gamma=0.5).gamma == 0.5
    with pytest.raises(DomainError):
        load_game(preset="sh-paper", gamma=3.0)


@pytest.mark.parametrize(
    "extra, message",
    [
        ("PAYOFF_G00=x\n", "malformed"),
        ("COLOUR=blue\n", "unknown keys"),
        ("ALICE_ANGLES=0,0\n", "3 comma-separated"),
        ("GAMMA=2\n", "invalid game config"),
        ("BOB_PAYOFF_H00=3\nBOB_PAYOFF_H01=0\nBOB_PAYOFF_H10=4\nBOB_PAYOFF_H11=2\n", "symmetric"),
        ("BOB_PAYOFF_H00=3\n", "together"),
    ],
)
def test_invalid_files(tmp_path, extra, message):
    path = tmp_path / "bad.env"
    path.write_text(PD_TEXT + extra)
    with pytest.raises(ConfigError, match=message):
        load_game(config_path=str(path))


def test_missing_payoff_entries():
    with pytest.raises(ConfigError, match="missing payoff"):
        GameConfigFile.from_values({"PAYOFF_G00": "1"})


def test_source_selection(tmp_path):
    with pytest.raises(ConfigError):
        load_game()
    with pytest.raises(ConfigError):
        load_game(config_path="x", preset="pd-paper")
    with pytest.raises(ConfigError, match="unknown preset"):
        load_game(preset="chicken")
    with pytest.raises(ConfigError, match="not found"):
        load_game(config_path=str(tmp_path / "absent.env"))
