"""
Tests for entanglement sweeps and their CSV output.
"""

import csv
import io
import math

import pytest

from src.config.game_config import load_game
from src.models.game import EquilibriumKind
from src.utils.errors import DomainError
from src.workflow.sweep import CSV_HEADER, EntanglementSweep, create_entanglement_sweep, rows_to_csv, write_csv


def _parse(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_pd_sweep_has_a_row_per_grid_point():
    rows = create_entanglement_sweep(load_game(preset="pd-paper")).run(101)
    assert len({row.gamma for row in rows}) == 101
    assert len(rows) >= 101
    gammas = [row.gamma for row in rows]
    assert gammas == sorted(gammas)
    assert gammas[0] == 0.0 and gammas[-1] == math.pi / 2


def test_stag_hunt_mixed_column_moves_monotonically():
    rows = create_entanglement_sweep(load_game(preset="sh-paper")).run(101)
    mixed = [row.x_star for row in rows if row.kind is EquilibriumKind.MIXED]
    assert len(mixed) == 101
    assert mixed[0] == pytest.approx(7 / 9, abs=1e-12)
    assert mixed[-1] == pytest.approx(0.5, abs=1e-12)
    assert all(later < earlier for earlier, later in zip(mixed, mixed[1:]))


def test_parallel_and_serial_sweeps_agree():
    game = load_game(preset="sh-paper")
    parallel = EntanglementSweep(game, max_workers=4, parallel=True).run(33)
    serial = EntanglementSweep(game, parallel=False).run(33)
    assert rows_to_csv(parallel) == rows_to_csv(serial)


def test_csv_format():
    rows = create_entanglement_sweep(load_game(preset="pd-paper")).run(2)
    text = rows_to_csv(rows)
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "0,0,0,2,2,pure,true"
    parsed = _parse(text)
    assert parsed[-1]["gamma"] == "1.57079632679"
    assert {row["kind"] for row in parsed} <= {"pure", "mixed"}
    assert {row["strict"] for row in parsed} <= {"true", "false"}
    assert "\r" not in text


def test_repeat_runs_write_identical_bytes(tmp_path):
    game = load_game(preset="sh-paper")
    first = write_csv(create_entanglement_sweep(game).run(21), str(tmp_path / "a.csv"))
    second = write_csv(create_entanglement_sweep(game).run(21), str(tmp_path / "nested" / "b.csv"))
    assert first.read_bytes() == second.read_bytes()


def test_grid_needs_two_points():
    with pytest.raises(DomainError):
        EntanglementSweep.grid(1)
