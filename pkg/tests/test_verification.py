"""
Tests for the cross-formalism verification pipeline.
"""

import time

import numpy as np
import pytest

from src.utils.errors import DomainError
from src.workflow.verification import CrossFormalismVerifier, create_verifier, pipeline_probabilities, random_config


def test_thousand_samples_agree_within_ten_seconds():
    started = time.perf_counter()
    report = create_verifier(samples=1000, seed=0, tolerance=1e-10).run()
    elapsed = time.perf_counter() - started
    assert report.passed
    assert report.first_failure is None
    assert set(report.max_deviation) == {"ga_vs_closed_form", "ga_vs_oracle", "closed_form_vs_oracle"}
    assert max(report.max_deviation.values()) <= 1e-10
    assert elapsed < 10.0


def test_zero_tolerance_fails_with_a_dump():
    report = CrossFormalismVerifier(samples=1, seed=7, tolerance=0.0).run()
    assert not report.passed
    failure = report.first_failure
    assert failure["sample"] == 0
    assert failure["deviation"] > 0.0
    assert set(failure["values"]) == {"ga", "closed_form", "oracle"}
    assert set(failure["config"]) == {"alice", "bob", "alice_directions", "bob_directions", "gamma"}


def test_runs_are_reproducible():
    first = create_verifier(samples=20, seed=3).run()
    second = create_verifier(samples=20, seed=3).run()
    assert first == second


def test_pipelines_return_sixteen_probabilities():
    values = pipeline_probabilities(random_config(np.random.default_rng(1)))
    for series in values.values():
        assert series.shape == (16,)
        assert series.reshape(4, 4).sum(axis=1) == pytest.approx(np.ones(4), abs=1e-12)


@pytest.mark.parametrize("kwargs", [{"samples": 0}, {"tolerance": -1.0}])
def test_invalid_arguments(kwargs):
    with pytest.raises(DomainError):
        CrossFormalismVerifier(**kwargs)
