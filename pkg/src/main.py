"""
Command-line interface for the EPR quantum games engine.

Subcommands: probs, payoff, ne, sweep, transition, verify.
Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from .config.game_config import PRESETS, load_game, parse_angle
from .engine.probabilities import outcome_distribution
from .games.embedding import satisfies_embedding
from .games.equilibria import analyze_config, certify_equilibria, locate_transition
from .games.payoffs import embedded_payoff, embedded_payoff_bob, expected_payoff_bob, expected_payoff_general
from .models.game import EquilibriumReport, GameConfig, OutcomeDistribution, TransitionEstimate, VerificationReport
from .utils.errors import ConfigError, ConventionError, DomainError, GameClassError, NoTransitionError
from .utils.logging import get_logger, setup_logging
from .utils.output_formatter import result_formatter
from .workflow.sweep import create_entanglement_sweep, rows_to_csv, write_csv
from .workflow.verification import create_verifier

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ConfigError, DomainError, NoTransitionError, GameClassError, OSError)


class QuantumGameApp:
    """Main application class for EPR quantum games."""

    def __init__(self, game: Optional[GameConfig] = None):
        self.game = game
        logger.debug("EPR quantum games engine initialized")

    def _require_game(self) -> GameConfig:
        if self.game is None:
            raise ConfigError("this command needs --config or --preset")
        return self.game

    def probs(self, i: int, j: int) -> OutcomeDistribution:
        return outcome_distribution(i, j, self._require_game())

    def payoff(self, x: float, y: float) -> Dict[str, Any]:
        """Payoffs at (x, y), with the embedded formula alongside when it applies."""
        game = self._require_game()
        result: Dict[str, Any] = {
            "gamma": game.gamma,
            "x": x,
            "y": y,
            "payoff_a": expected_payoff_general(x, y, game),
            "payoff_b": expected_payoff_bob(x, y, game),
            "embedded": None,
        }
        if satisfies_embedding(game):
            result["embedded"] = {
                "payoff_a": embedded_payoff(x, y, game.gamma, game.payoffs),
                "payoff_b": embedded_payoff_bob(x, y, game.gamma, game.payoffs),
            }
        return result

    def equilibria(self) -> EquilibriumReport:
        game = self._require_game()
        report = analyze_config(game)
        if not certify_equilibria(report, game):
            raise ConventionError(f"reported equilibria at gamma={game.gamma!r} failed certification")
        return report

    def sweep(self, points: Optional[int] = None, output_file: Optional[str] = None) -> str:
        """Run a gamma sweep; writes CSV to output_file or returns it."""
        rows = create_entanglement_sweep(self._require_game()).run(points)
        if output_file:
            write_csv(rows, output_file)
            return ""
        return rows_to_csv(rows)

    def transition(self) -> TransitionEstimate:
        return locate_transition(self._require_game().payoffs)

    def verify(self, samples: Optional[int], seed: Optional[int], tolerance: Optional[float]) -> VerificationReport:
        return create_verifier(samples=samples, seed=seed, tolerance=tolerance).run()


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _grid_size(text: str) -> int:
    value = _positive_int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("grid needs at least 2 points")
    return value


def _tolerance(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be non-negative, got {text!r}")
    return value


def _angle(text: str) -> float:
    try:
        return parse_angle(text)
    except ConfigError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _probability(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a probability, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument("--config", help="Game-config file (KEY=VALUE)", default=None)
    source.add_argument("--preset", choices=sorted(PRESETS), help="Built-in payoff matrix", default=None)
    common.add_argument("--gamma", type=_angle, default=None, help="Entanglement angle, e.g. 0.5, pi/2, 90deg")
    common.add_argument("--out", default=None, help="Write output to this file instead of stdout")
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")

    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="EPR quantum games - probabilities, payoffs and equilibria via geometric algebra",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python -m src.main probs --preset pd-paper --gamma pi/2
  python -m src.main ne --preset sh-paper --gamma 0
  python -m src.main sweep --preset sh-paper --grid 101 --out sh.csv
  python -m src.main transition --preset pd-paper
  python -m src.main verify --samples 1000 --tol 1e-10
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    probs = commands.add_parser("probs", parents=[common], help="Outcome probabilities for one direction pair")
    probs.add_argument("-i", "--alice-direction", type=int, choices=(1, 2), default=1)
    probs.add_argument("-j", "--bob-direction", type=int, choices=(1, 2), default=1)

    payoff = commands.add_parser("payoff", parents=[common], help="Expected payoffs at a strategy profile")
    payoff.add_argument("--x", type=_probability, default=0.0, help="Alice's first-direction probability")
    payoff.add_argument("--y", type=_probability, default=0.0, help="Bob's first-direction probability")

    commands.add_parser("ne", parents=[common], help="Nash equilibria")

    sweep = commands.add_parser("sweep", parents=[common], help="Equilibria over a gamma grid, as CSV")
    sweep.add_argument("--grid", type=_grid_size, default=None, help="Number of gamma points in [0, pi/2]")

    commands.add_parser("transition", parents=[common], help="PD phase-transition angle")

    verify = commands.add_parser("verify", parents=[common], help="Cross-check GA, closed form and oracle")
    verify.add_argument("--samples", type=_positive_int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--tol", type=_tolerance, default=None)
    return parser


def _emit(content: str, output_file: Optional[str]) -> None:
    if output_file:
        saved = result_formatter.save(content, output_file)
        logger.info(f"Output saved to {saved}")
    else:
        print(content)


def run(args: argparse.Namespace) -> int:
    """Execute a parsed command and return its exit code."""
    formatter = result_formatter
    as_json = args.format == "json"

    if args.command == "verify":
        report = QuantumGameApp().verify(args.samples, args.seed, args.tol)
        _emit(formatter.to_json(report) if as_json else formatter.verification_text(report), args.out)
        return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED

    game = load_game(config_path=args.config, preset=args.preset, gamma=args.gamma)
    app = QuantumGameApp(game)

    if args.command == "probs":
        distribution = app.probs(args.alice_direction, args.bob_direction)
        if as_json:
            content = formatter.to_json({
                "gamma": game.gamma,
                "i": args.alice_direction,
                "j": args.bob_direction,
                **distribution.model_dump(),
                "sum": distribution.total,
            })
        else:
            content = formatter.distribution_text(game.gamma, args.alice_direction, args.bob_direction, distribution)
    elif args.command == "payoff":
        result = app.payoff(args.x, args.y)
        content = formatter.to_json(result) if as_json else formatter.payoff_text(result)
    elif args.command == "ne":
        report = app.equilibria()
        content = formatter.to_json(report) if as_json else formatter.equilibria_text(report)
    elif args.command == "sweep":
        csv_text = app.sweep(args.grid, args.out)
        if csv_text:
            sys.stdout.write(csv_text)
        return EXIT_OK
    else:
        estimate = app.transition()
        content = formatter.to_json({**estimate.model_dump(), "difference": estimate.difference}) if as_json \
            else formatter.transition_text(estimate)

    _emit(content, args.out)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    args = build_parser().parse_args(argv)
    setup_logging(verbose=args.verbose)
    try:
        return run(args)
    except USAGE_ERRORS as e:
        logger.debug(f"{type(e).__name__}: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConventionError as e:
        logger.debug(f"Self-check failed: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED


if __name__ == "__main__":
    sys.exit(main())
