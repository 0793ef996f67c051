"""
Entanglement sweeps: equilibria over a uniform gamma grid, written as CSV.
"""

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Iterable, List, Optional

import numpy as np

from ..config.settings import config
from ..games.equilibria import analyze_config
from ..models.game import GAMMA_MAX, GameConfig, SweepRow
from ..utils.errors import DomainError
from ..utils.logging import get_logger

logger = get_logger(__name__)

CSV_HEADER = ("gamma", "x_star", "y_star", "payoff_a", "payoff_b", "kind", "strict")


class EntanglementSweep:
    """Equilibrium analysis of one game at every point of a gamma grid."""

    def __init__(self, game: GameConfig, max_workers: Optional[int] = None, parallel: Optional[bool] = None):
        self.game = game
        self.max_workers = max_workers or config.sweep.max_workers
        self.parallel = config.sweep.enable_parallel_processing if parallel is None else parallel

    @staticmethod
    def grid(points: int) -> np.ndarray:
        if points < 2:
            raise DomainError(f"sweep grid needs at least 2 points, got {points}")
        return np.linspace(0.0, GAMMA_MAX, points)

    def rows_at(self, gamma: float) -> List[SweepRow]:
        report = analyze_config(self.game.with_gamma(gamma))
        return [
            SweepRow(
                gamma=report.gamma,
                x_star=eq.profile.x,
                y_star=eq.profile.y,
                payoff_a=eq.payoff_a,
                payoff_b=eq.payoff_b,
                kind=eq.kind,
                strict=eq.strict,
            )
            for eq in report.equilibria
        ]

    def run(self, points: Optional[int] = None) -> List[SweepRow]:
        """
        Sweep gamma over [0, pi/2].

        Rows come back in grid order, and within one gamma in the enumeration order of
        the equilibrium report, whether or not the grid is evaluated in parallel.
        """
        gammas = [float(g) for g in self.grid(points or config.sweep.grid_points)]
        logger.info(f"Sweeping {len(gammas)} gamma values (parallel={self.parallel})")
        if self.parallel and self.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                per_gamma = list(executor.map(self.rows_at, gammas))
        else:
            per_gamma = [self.rows_at(g) for g in gammas]
        rows = [row for rows in per_gamma for row in rows]
        logger.info(f"Sweep produced {len(rows)} rows")
        return rows


def format_number(value: float, precision: Optional[int] = None) -> str:
    digits = precision or config.output_precision
    return f"{value + 0.0:.{digits}g}"


def rows_to_csv(rows: Iterable[SweepRow], precision: Optional[int] = None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([
            format_number(row.gamma, precision),
            format_number(row.x_star, precision),
            format_number(row.y_star, precision),
            format_number(row.payoff_a, precision),
            format_number(row.payoff_b, precision),
            row.kind.value,
            "true" if row.strict else "false",
        ])
    return buffer.getvalue()


def write_csv(rows: Iterable[SweepRow], path: str, precision: Optional[int] = None) -> Path:
    """Write sweep rows; raises OSError when the path is not writable."""
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(rows_to_csv(rows, precision), encoding="utf-8", newline="")
    logger.info(f"Sweep CSV saved to {output_path}")
    return output_path


def create_entanglement_sweep(game: GameConfig, **kwargs) -> EntanglementSweep:
    """Create a configured sweep for a game."""
    return EntanglementSweep(game, **kwargs)
