"""
Tests for the Cl(3,0) kernel.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.multivector import (
    GRADES,
    IOTA,
    IOTA_SIGMA,
    ONE,
    SIGMA,
    STRUCTURE,
    Multivector3,
    TwoParticleMultivector,
    geometric_product,
    reverse,
    scalar_product,
)

coefficient = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False)
multivectors = st.lists(coefficient, min_size=8, max_size=8).map(Multivector3)


def test_basis_vectors_square_to_one():
    for sigma in SIGMA:
        assert sigma * sigma == ONE


def test_distinct_basis_vectors_anticommute():
    for a in range(3):
        for b in range(a + 1, 3):
            assert SIGMA[a] * SIGMA[b] == -(SIGMA[b] * SIGMA[a])


def test_pseudoscalar_squares_to_minus_one_and_is_central():
    assert IOTA * IOTA == -ONE
    for index in range(8):
        blade = Multivector3.basis(index)
        assert IOTA * blade == blade * IOTA


def test_iota_sigma_are_the_unit_bivectors():
    # i s1 = s2s3, i s2 = -s1s3, i s3 = s1s2
    assert IOTA_SIGMA[0] == Multivector3.basis(6)
    assert IOTA_SIGMA[1] == -Multivector3.basis(5)
    assert IOTA_SIGMA[2] == Multivector3.basis(4)
    for bivector in IOTA_SIGMA:
        assert bivector * bivector == -ONE


@given(multivectors, multivectors, multivectors)
@settings(max_examples=1000)
def test_product_is_associative(a, b, c):
    assert ((a * b) * c).is_close(a * (b * c), 1e-9)


def test_product_is_associative_on_unit_scale_draws(rng):
    for a, b, c in rng.uniform(-1.0, 1.0, size=(1000, 3, 8)):
        a, b, c = Multivector3(a), Multivector3(b), Multivector3(c)
        assert ((a * b) * c).is_close(a * (b * c), 1e-12)


@given(multivectors, multivectors)
@settings(max_examples=50)
def test_reverse_is_an_anti_automorphism(a, b):
    assert reverse(a * b).is_close(reverse(b) * reverse(a), 1e-9)


def test_reverse_flips_grades_two_and_three():
    element = Multivector3(np.arange(1.0, 9.0))
    expected = np.where(GRADES >= 2, -1.0, 1.0) * np.arange(1.0, 9.0)
    np.testing.assert_array_equal(element.reverse().coefficients, expected)


def test_grade_projection_and_parity():
    element = Multivector3(np.arange(1.0, 9.0))
    assert element.grade(0) == Multivector3.scalar(1.0)
    assert element.grade(3) == 8.0 * IOTA
    assert (element.grade(0) + element.grade(2)).is_even()
    assert not element.is_even()


def test_coefficients_are_read_only():
    element = Multivector3.vector(1.0, 2.0, 3.0)
    with pytest.raises(ValueError):
        element.coefficients[0] = 5.0


def test_numpy_scalars_scale_multivectors():
    assert np.float64(2.0) * SIGMA[0] == Multivector3.vector(2.0, 0.0, 0.0)


def test_geometric_product_rejects_mixed_operands():
    with pytest.raises(TypeError):
        geometric_product(ONE, TwoParticleMultivector.scalar(1.0))


@given(multivectors, multivectors, multivectors, multivectors)
@settings(max_examples=25)
def test_two_particle_product_factorizes(a, b, c, d):
    left = TwoParticleMultivector.from_factors(a, b) * TwoParticleMultivector.from_factors(c, d)
    right = TwoParticleMultivector.from_factors(a * c, b * d)
    assert left.is_close(right, 1e-8)


def test_factors_on_different_particles_commute():
    first = TwoParticleMultivector.particle(SIGMA[0], 1)
    second = TwoParticleMultivector.particle(SIGMA[1], 2)
    assert first * second == second * first


def test_two_particle_reverse_acts_per_particle():
    pair = TwoParticleMultivector.from_factors(IOTA_SIGMA[0], IOTA_SIGMA[2])
    assert pair.reverse() == TwoParticleMultivector.from_factors(-IOTA_SIGMA[0], -IOTA_SIGMA[2])


def test_two_particle_product_matches_dense_contraction(rng):
    for _ in range(200):
        a, b = rng.normal(size=(8, 8)), rng.normal(size=(8, 8))
        expected = np.einsum("ip,jq,ijk,pql->kl", a, b, STRUCTURE, STRUCTURE)
        product = TwoParticleMultivector(a) * TwoParticleMultivector(b)
        np.testing.assert_allclose(product.coefficients, expected, atol=1e-12)


def test_scalar_product_is_the_scalar_part_of_the_product(rng):
    for _ in range(200):
        a, b = Multivector3(rng.normal(size=8)), Multivector3(rng.normal(size=8))
        assert scalar_product(a, b) == pytest.approx((a * b).scalar_part, abs=1e-12)
        pa, pb = TwoParticleMultivector(rng.normal(size=(8, 8))), TwoParticleMultivector(rng.normal(size=(8, 8)))
        assert scalar_product(pa, pb) == pytest.approx((pa * pb).scalar_part, abs=1e-12)
    with pytest.raises(TypeError):
        scalar_product(ONE, TwoParticleMultivector.scalar(1.0))
