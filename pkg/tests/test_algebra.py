"""Core blade storage, grade machinery and the exterior product."""

import numpy as np
import pytest

from extensor.algebra import (
    AlgebraError,
    DimensionMismatch,
    KindMismatch,
    Multiform,
    Multivector,
    apply_lift,
    change_basis,
    grade_project,
    include,
    lift_matrix,
    mask_from_indices,
    merge_sign,
    wedge,
)
from extensor.duality import pairing
from extensor.sampling import random_multiform, random_multivector


def test_dimension_bounds():
    with pytest.raises(AlgebraError):
        Multivector(0)
    with pytest.raises(AlgebraError):
        Multivector(13)
    with pytest.raises(AlgebraError):
        Multivector(3, np.zeros(7))


def test_nonfinite_coefficients_rejected():
    data = np.zeros(4)
    data[1] = np.nan
    with pytest.raises(AlgebraError):
        Multivector(2, data)


def test_immutability():
    x = Multivector.basis_blade(2, 1)
    with pytest.raises(AttributeError):
        x.n = 3
    with pytest.raises(ValueError):
        x.coeffs[0] = 1.0


def test_mask_from_indices():
    assert mask_from_indices(3, [1, 3]) == 0b101
    with pytest.raises(AlgebraError):
        mask_from_indices(3, [4])
    with pytest.raises(AlgebraError):
        mask_from_indices(3, [2, 2])


def test_grade_projection_and_grades(rng):
    x = random_multivector(rng, 3)
    recombined = sum((x.grade(p) for p in range(4)), Multivector.zero(3))
    assert recombined.allclose(x)
    blade = Multivector.basis_blade(3, 1, 2)
    assert blade.grades() == [2]
    assert blade.is_homogeneous(2)
    assert not blade.is_homogeneous(1)


def test_include_rejects_mixed_grades():
    mixed = Multivector.scalar(3, 1.0) + Multivector.basis_blade(3, 1)
    with pytest.raises(AlgebraError):
        include(mixed, 1)
    assert include(Multivector.basis_blade(3, 1), 1).grades() == [1]
    assert grade_project(mixed, 0).grades() == [0]


def test_involution_and_reversion_signs():
    # grade p scales by (-1)^p and (-1)^(p(p-1)/2) respectively
    for p, indices in [(0, ()), (1, (1,)), (2, (1, 2)), (3, (1, 2, 3))]:
        blade = (
            Multivector.scalar(3, 1.0) if p == 0 else Multivector.basis_blade(3, *indices)
        )
        assert blade.involution().allclose(blade * (-1.0) ** p)
        assert blade.reversion().allclose(blade * (-1.0) ** (p * (p - 1) // 2))


def test_wedge_blade_signs():
    e1 = Multivector.basis_blade(3, 1)
    e2 = Multivector.basis_blade(3, 2)
    e12 = Multivector.basis_blade(3, 1, 2)
    assert wedge(e1, e2).allclose(e12)
    assert wedge(e2, e1).allclose(-1.0 * e12)
    assert wedge(e1, e1).norm_inf() == 0.0


def test_merge_sign_matches_blade_reordering():
    # e_{1,3} followed by e_2 needs one transposition: sign -1
    sign = merge_sign(0b101, np.array([0b010]), 3)
    assert sign[0] == -1.0


def test_wedge_graded_anticommutativity(rng):
    from extensor.sampling import random_homogeneous

    for p in range(4):
        for q in range(4 - p):
            x = random_homogeneous(rng, 3, p)
            y = random_homogeneous(rng, 3, q)
            sign = (-1.0) ** (p * q)
            assert wedge(x, y).allclose(sign * wedge(y, x))


def test_wedge_associative_and_bilinear(rng):
    x, y, z = (random_multivector(rng, 4) for _ in range(3))
    assert wedge(wedge(x, y), z).allclose(wedge(x, wedge(y, z)))
    assert wedge(x + y, z).allclose(wedge(x, z) + wedge(y, z))


def test_kind_and_dimension_mismatch():
    with pytest.raises(KindMismatch):
        wedge(Multivector.basis_blade(2, 1), Multiform.basis_blade(2, 1))
    with pytest.raises(DimensionMismatch):
        wedge(Multivector.basis_blade(2, 1), Multivector.basis_blade(3, 1))


def test_lift_matrix_is_grade_wise_determinant(rng):
    m = rng.uniform(-1, 1, (3, 3))
    lift = lift_matrix(m, 3)
    # top grade entry is the full determinant
    assert np.isclose(lift[7, 7], np.linalg.det(m))
    # grade-1 block is the matrix itself
    for j in range(3):
        for k in range(3):
            assert np.isclose(lift[1 << j, 1 << k], m[j, k])


def test_apply_lift_agrees_with_dense(rng):
    m = rng.uniform(-1, 1, (4, 4))
    x = random_multivector(rng, 4)
    dense = lift_matrix(m, 4) @ x.coeffs
    sparse = apply_lift(m, x.coeffs, 4)
    assert np.allclose(dense, sparse, atol=1e-12)


def test_change_basis_preserves_pairing(rng):
    m = rng.uniform(-1, 1, (3, 3)) + 3.0 * np.eye(3)
    x = random_multivector(rng, 3)
    phi = random_multiform(rng, 3)
    before = pairing(phi, x)
    after = pairing(change_basis(phi, m), change_basis(x, m))
    assert np.isclose(before, after, rtol=1e-9)


def test_change_basis_rejects_singular():
    with pytest.raises(AlgebraError):
        change_basis(Multivector.basis_blade(2, 1), np.zeros((2, 2)))


def test_repr_round_readability():
    x = Multivector.basis_blade(3, 1, 3) * 2.0 + Multivector.scalar(3, 1.0)
    text = repr(x)
    assert "e13" in text and "2" in text
