"""Metric tensors, extensors, extension, reciprocal bases, pseudoscalars."""

import numpy as np
import pytest

from extensor.algebra import AlgebraError, Multiform, Multivector, wedge
from extensor.duality import pairing
from extensor.metric import (
    MetricExtensor,
    MetricTensor,
    extend,
    extend_inverse,
    extensor_from_tensor,
    generalized_permutation_symbol,
    pseudoscalars,
    reciprocal_basis,
    tensor_from_extensor,
)
from extensor.sampling import random_metric, random_multiform, random_multivector

G3 = np.array([[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]])


def test_metric_validation():
    with pytest.raises(AlgebraError):
        MetricExtensor(2, [[1.0, 0.5], [0.0, 1.0]])  # not symmetric
    with pytest.raises(AlgebraError):
        MetricExtensor(2, [[1.0, 1.0], [1.0, 1.0]])  # degenerate
    with pytest.raises(AlgebraError):
        MetricExtensor(2, np.eye(3))  # wrong shape


def test_grade_one_action_matches_matrix():
    gamma = MetricExtensor(3, G3)
    v = Multivector.basis_blade(3, 2)
    image = gamma(v)
    expected = G3[1]
    for j in range(3):
        assert image.coeffs[1 << j] == expected[j]
    back = gamma.apply_inverse(image)
    assert back.allclose(v, atol=1e-12)


def test_grade_one_action_rejects_nonvectors(rng):
    gamma = MetricExtensor(3, G3)
    with pytest.raises(AlgebraError):
        gamma(Multivector.basis_blade(3, 1, 2))
    with pytest.raises(AlgebraError):
        gamma.apply_inverse(Multiform.scalar(3, 1.0))


def test_tensor_extensor_correspondence(rng):
    g = MetricTensor(3, G3)
    gamma = extensor_from_tensor(g)
    assert np.array_equal(tensor_from_extensor(gamma).matrix, g.matrix)
    v = random_multivector(rng, 3).grade(1)
    w = random_multivector(rng, 3).grade(1)
    assert np.isclose(pairing(gamma(v), w), g(v, w), rtol=1e-12)


def test_extend_frozen_minor():
    # extend(e12) coefficients are 2x2 minors of G3: frozen from the matrix
    gamma = MetricExtensor(3, G3)
    out = extend(gamma, Multivector.basis_blade(3, 1, 2))
    assert np.allclose(out.coeffs, [0, 0, 0, 5.0, 0, 2.0, 1.0, 0], atol=1e-12)


def test_extend_is_exterior_power(rng):
    gamma = random_metric(rng, 4)
    x, y = random_multivector(rng, 4), random_multivector(rng, 4)
    assert extend(gamma, wedge(x, y)).allclose(
        wedge(extend(gamma, x), extend(gamma, y)), rtol=1e-9
    )


def test_extend_inverse_round_trip(rng):
    gamma = random_metric(rng, 5)
    x = random_multivector(rng, 5)
    phi = random_multiform(rng, 5)
    assert extend_inverse(gamma, extend(gamma, x)).allclose(x, rtol=1e-9)
    assert extend(gamma, extend_inverse(gamma, phi)).allclose(phi, rtol=1e-9)


def test_reciprocal_basis_pairings():
    gamma = MetricExtensor(3, G3)
    vectors, forms = reciprocal_basis(gamma)
    for j in range(3):
        for k in range(3):
            delta = 1.0 if j == k else 0.0
            # <gamma(e_j), e^k> = delta_j^k
            e_j = Multivector.basis_blade(3, j + 1)
            assert np.isclose(pairing(gamma(e_j), vectors[k]), delta, atol=1e-12)
            # <d_j-bar, e_k> = g_jk recovers the matrix rows
            e_k = Multivector.basis_blade(3, k + 1)
            assert np.isclose(pairing(forms[j], e_k), G3[j, k], atol=1e-12)


def test_pseudoscalars_carry_determinant(rng):
    gamma = random_metric(rng, 4)
    det = float(np.linalg.det(gamma.matrix))
    ps = pseudoscalars(gamma)
    top = (1 << 4) - 1
    assert np.isclose(ps.eps_wedge_down.coeffs[top], det, rtol=1e-9)
    assert np.isclose(ps.e_wedge_up.coeffs[top], 1.0 / det, rtol=1e-9)
    assert ps.e_wedge.coeffs[top] == 1.0 and ps.eps_wedge.coeffs[top] == 1.0


def test_generalized_permutation_symbol():
    assert generalized_permutation_symbol((1, 2), (1, 2)) == 1.0
    assert generalized_permutation_symbol((1, 2), (2, 1)) == -1.0
    assert generalized_permutation_symbol((1, 2), (1, 3)) == 0.0
    assert generalized_permutation_symbol((1,), (1, 2)) == 0.0
    assert generalized_permutation_symbol((), ()) == 1.0
