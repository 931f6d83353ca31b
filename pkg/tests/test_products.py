"""Metric products, the inversion formulas and the expansion formulas."""

import numpy as np
import pytest

from extensor.algebra import AlgebraError, Multiform, Multivector
from extensor.metric import MetricExtensor, extend_inverse
from extensor.products import (
    expand_multiform,
    expand_multivector,
    invert_extension_via_formula,
    invert_metric_via_formula,
    lcontract_mv,
    rcontract_mv,
    scalar_product_mf,
    scalar_product_mv,
)
from extensor.sampling import random_metric, random_multiform, random_multivector

G3 = np.array([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])


def test_scalar_product_frozen_value():
    gamma = MetricExtensor(3, G3)
    a = Multivector(3, [0, 1, 1, 0, 0, 0, 1, 0])  # e1 + e2 + e23
    b = Multivector(3, [0, 0, 0, 1, 0, 0, 0, 1])  # e12 + e123
    assert np.isclose(scalar_product_mv(gamma, a, b), 1.0, atol=1e-12)


def test_lcontract_frozen_value():
    gamma = MetricExtensor(3, G3)
    a = Multivector(3, [0, 1, 1, 0, 0, 0, 1, 0])
    b = Multivector(3, [0, 0, 0, 1, 0, 0, 0, 1])
    expected = [-1.0, -9.0, 5.0, 1.0, -1.0, -4.0, 3.0, 0.0]
    assert np.allclose(lcontract_mv(gamma, a, b).coeffs, expected, atol=1e-12)


def test_scalar_product_symmetry(rng):
    gamma = random_metric(rng, 4)
    x, y = random_multivector(rng, 4), random_multivector(rng, 4)
    assert np.isclose(
        scalar_product_mv(gamma, x, y), scalar_product_mv(gamma, y, x), rtol=1e-9
    )
    phi, psi = random_multiform(rng, 4), random_multiform(rng, 4)
    assert np.isclose(
        scalar_product_mf(gamma, phi, psi), scalar_product_mf(gamma, psi, phi), rtol=1e-9
    )


def test_contracted_products_mirror_duality(rng):
    gamma = random_metric(rng, 3)
    x = random_multivector(rng, 3)
    y = random_multivector(rng, 3)
    # a 0-grade contractor acts as a scalar
    alpha = Multivector.scalar(3, 2.0)
    assert lcontract_mv(gamma, alpha, y).allclose(2.0 * y, rtol=1e-9)
    assert rcontract_mv(gamma, y, alpha).allclose(2.0 * y, rtol=1e-9)


def test_metric_inversion_worked_example():
    # diag(2, 3): the inverse sends d1 to e1/2
    gamma = MetricExtensor(2, np.diag([2.0, 3.0]))
    omega = Multiform.basis_blade(2, 1)
    for variant in (1, 2):
        out = invert_metric_via_formula(gamma, omega, variant=variant)
        assert out.allclose(0.5 * Multivector.basis_blade(2, 1), rtol=1e-12)


def test_metric_inversion_requires_grade_one():
    gamma = MetricExtensor(2, np.diag([2.0, 3.0]))
    with pytest.raises(AlgebraError):
        invert_metric_via_formula(gamma, Multiform.basis_blade(2, 1, 2))


def test_extension_inversion_matches_matrix_inverse(rng):
    for n in (2, 3, 4):
        gamma = random_metric(rng, n)
        phi = random_multiform(rng, n)
        expected = extend_inverse(gamma, phi)
        first = invert_extension_via_formula(gamma, phi, variant=1)
        second = invert_extension_via_formula(gamma, phi, variant=2)
        assert first.allclose(expected, rtol=1e-9)
        assert first.allclose(second, rtol=1e-12)


def test_bad_variant_rejected(rng):
    gamma = random_metric(rng, 2)
    with pytest.raises(AlgebraError):
        invert_extension_via_formula(gamma, random_multiform(rng, 2), variant=3)
    with pytest.raises(AlgebraError):
        expand_multivector(gamma, random_multivector(rng, 2), variant=0)


def test_expansion_is_identity(rng):
    gamma = random_metric(rng, 4)
    x = random_multivector(rng, 4)
    phi = random_multiform(rng, 4)
    for variant in (1, 2):
        assert expand_multivector(gamma, x, variant).allclose(x, rtol=1e-9)
        assert expand_multiform(gamma, phi, variant).allclose(phi, rtol=1e-9)
