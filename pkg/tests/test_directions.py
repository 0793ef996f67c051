"""
Tests for the direction functions X, Y, F, G, U, V and Z.
"""

import math

import pytest

from src.engine.directions import fguv_fns, gv_fns, x_fn, y_fn, z_expanded, z_fn
from src.models.game import PlayerParams

from .conftest import random_params


def test_x_is_cosine_of_offset_when_alpha3_is_zero():
    params = PlayerParams(e1=0.9, e2=0.3, e3=0.0)
    assert x_fn(0.4, params) == pytest.approx(math.cos(0.9 - 0.4), abs=1e-15)


def test_y_mirrors_x():
    params = PlayerParams(e1=1.1, e2=-0.2, e3=2.5)
    assert y_fn(0.7, params) == x_fn(0.7, params)
    assert gv_fns(0.7, params) == fguv_fns(0.7, params)


def test_x_f_u_form_a_unit_vector(rng):
    for _ in range(200):
        params = random_params(rng)
        kappa = rng.uniform(0.0, 2 * math.pi)
        f, u = fguv_fns(kappa, params)
        assert x_fn(kappa, params) ** 2 + f ** 2 + u ** 2 == pytest.approx(1.0, abs=1e-12)


def test_z_vanishes_for_identity_players_on_the_sigma3_axis():
    identity = PlayerParams()
    for kappa1 in (0.0, math.pi):
        for kappa2 in (0.0, math.pi):
            assert z_fn(kappa1, kappa2, identity, identity) == pytest.approx(0.0, abs=1e-15)


def test_z_expansion_matches_product_form(rng):
    for _ in range(500):
        alice, bob = random_params(rng), random_params(rng)
        kappa1, kappa2 = rng.uniform(0.0, 2 * math.pi, size=2)
        assert z_expanded(kappa1, kappa2, alice, bob) == pytest.approx(z_fn(kappa1, kappa2, alice, bob), abs=1e-12)
