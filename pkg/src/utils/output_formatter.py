"""
Output formatters for the EPR quantum games engine.

Text is for people, JSON for scripts; both go to stdout.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel

from ..config.settings import config
from ..models.game import (
    EquilibriumReport,
    OutcomeDistribution,
    TransitionEstimate,
    VerificationReport,
)


class ResultFormatter:
    """Formatter for command results."""

    def __init__(self, precision: Optional[int] = None):
        self.precision = precision or config.output_precision

    def number(self, value: float) -> str:
        return f"{value + 0.0:.{self.precision}g}"

    def to_json(self, data: Any, indent: int = 2) -> str:
        """
        Format a result as JSON.

        Args:
            data: A pydantic model or a plain dictionary
            indent: JSON indentation

        Returns:
            str: JSON document
        """
        if isinstance(data, BaseModel):
            data = data.model_dump(mode="json")
        return json.dumps(data, indent=indent, default=str)

    def distribution_text(self, gamma: float, i: int, j: int, distribution: OutcomeDistribution) -> str:
        lines = [f"gamma = {self.number(gamma)}", f"directions (i, j) = ({i}, {j})"]
        for label, value in zip(("P00", "P01", "P10", "P11"), distribution.as_tuple()):
            lines.append(f"{label} = {value:.{self.precision}f}")
        lines.append(f"sum = {distribution.total:.{self.precision}f}")
        return "\n".join(lines)

    def payoff_text(self, result: Dict[str, Any]) -> str:
        lines = [f"gamma = {self.number(result['gamma'])}", f"x = {self.number(result['x'])}, y = {self.number(result['y'])}"]
        lines.append(f"Pi_A = {self.number(result['payoff_a'])}")
        lines.append(f"Pi_B = {self.number(result['payoff_b'])}")
        if result.get("embedded") is not None:
            embedded = result["embedded"]
            lines.append(
                f"embedded formula: Pi_A = {self.number(embedded['payoff_a'])}, Pi_B = {self.number(embedded['payoff_b'])}"
            )
        return "\n".join(lines)

    def equilibria_text(self, report: EquilibriumReport) -> str:
        lines = [f"Nash equilibria at gamma = {self.number(report.gamma)}"]
        if not report.equilibria:
            lines.append("  none")
        for eq in report.equilibria:
            x, y = eq.profile.as_tuple()
            strictness = "strict" if eq.strict else "weak"
            lines.append(
                f"  ({self.number(x)}, {self.number(y)})  payoffs {self.number(eq.payoff_a)}, "
                f"{self.number(eq.payoff_b)}  {eq.kind.value} {strictness}"
            )
        if report.continuum:
            lines.append("  continuum of equilibria")
        lines.extend(f"note: {note}" for note in report.notes)
        return "\n".join(lines)

    def transition_text(self, estimate: TransitionEstimate) -> str:
        return "\n".join([
            f"analytic  = {self.number(estimate.analytic)}",
            f"bisection = {self.number(estimate.bisection)}",
            f"difference = {estimate.difference:.3e}",
        ])

    def verification_text(self, report: VerificationReport) -> str:
        lines = [
            f"samples = {report.samples}, seed = {report.seed}, tolerance = {report.tolerance:g}",
        ]
        for pair, deviation in report.max_deviation.items():
            lines.append(f"max |{pair.replace('_vs_', ' - ')}| = {deviation:.3e}")
        lines.append("PASS" if report.passed else "FAIL")
        if report.first_failure is not None:
            lines.append("first failing configuration:")
            lines.append(json.dumps(report.first_failure, indent=2))
        return "\n".join(lines)

    def save(self, content: str, output_file: str) -> str:
        """Write formatted output to a file, creating parent directories."""
        file_path = Path(output_file)
        file_path.parent.mkdir(parents=True, exist_ok=True)
        file_path.write_text(content + "\n", encoding="utf-8")
        return str(file_path)


# Global formatter instance
result_formatter = ResultFormatter()
