"""Metric-free pairing and the four duality contractions."""

import numpy as np
import pytest

from extensor.algebra import KindMismatch, Multiform, Multivector, wedge
from extensor.duality import (
    left_contract_mf,
    left_contract_mv,
    nondegeneracy_witness,
    pairing,
    right_contract_mf,
    right_contract_mv,
)
from extensor.sampling import random_homogeneous, random_multiform, random_multivector


def test_pairing_is_kronecker_on_blades():
    n = 3
    for a in range(1 << n):
        for b in range(1 << n):
            value = pairing(Multiform.from_blade(n, a), Multivector.from_blade(n, b))
            assert value == (1.0 if a == b else 0.0)


def test_pairing_accepts_either_order(rng):
    phi = random_multiform(rng, 3)
    x = random_multivector(rng, 3)
    assert pairing(phi, x) == pairing(x, phi)
    with pytest.raises(KindMismatch):
        pairing(x, x)


def test_left_contraction_blade_cases():
    n = 2
    d1 = Multiform.basis_blade(n, 1)
    d2 = Multiform.basis_blade(n, 2)
    e12 = Multivector.basis_blade(n, 1, 2)
    assert left_contract_mv(d1, e12).allclose(Multivector.basis_blade(n, 2))
    assert left_contract_mv(d2, e12).allclose(-1.0 * Multivector.basis_blade(n, 1))
    assert right_contract_mv(e12, d2).allclose(Multivector.basis_blade(n, 1))


def test_contraction_frozen_values():
    # values frozen from the brute-force tensor oracle
    n = 3
    phi = Multiform(n, [0, 1, 0, 0, 0, 2, 0, 0])  # d1 + 2*d13
    x = Multivector(n, [0, 0, 0, 0, 0, 0, 0.5, 1])  # e123 + 0.5*e23
    expected = [0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0, 0.0]
    assert np.allclose(left_contract_mv(phi, x).coeffs, expected)
    assert np.allclose(right_contract_mv(x, phi).coeffs, expected)
    v = Multivector(n, [0, 1, 0, 2, 0, 0, 0, 0])  # e1 + 2*e12
    psi = Multiform(n, [0, 0, 0, 0, 0, 0, 0, 3])  # 3*d123
    assert np.allclose(
        left_contract_mf(v, psi).coeffs, [0.0, 0.0, 0.0, 0.0, -6.0, 0.0, 3.0, 0.0]
    )


def test_contraction_defines_adjoint_of_wedge(rng):
    # <phi, x| is adjoint to wedging by rev(phi) on the left
    n = 4
    phi, psi = random_multiform(rng, n), random_multiform(rng, n)
    x = random_multivector(rng, n)
    lhs = pairing(psi, left_contract_mv(phi, x))
    rhs = pairing(wedge(phi.reversion(), psi), x)
    assert np.isclose(lhs, rhs, rtol=1e-9)


def test_left_right_relation_on_homogeneous(rng):
    n = 4
    for q in range(n + 1):
        for p in range(q + 1):
            phi = random_homogeneous(rng, n, p, Multiform)
            x = random_homogeneous(rng, n, q, Multivector)
            sign = (-1.0) ** (p * (q - p))
            assert left_contract_mv(phi, x).allclose(sign * right_contract_mv(x, phi))


def test_contraction_kind_checks(rng):
    phi = random_multiform(rng, 2)
    x = random_multivector(rng, 2)
    with pytest.raises(KindMismatch):
        left_contract_mv(x, phi)
    with pytest.raises(KindMismatch):
        left_contract_mf(phi, x)
    with pytest.raises(KindMismatch):
        right_contract_mv(phi, x)
    with pytest.raises(KindMismatch):
        right_contract_mf(x, phi)


def test_nondegeneracy_witness(rng):
    x = Multivector.basis_blade(3, 2, 3) * 0.25
    mask = nondegeneracy_witness(x)
    assert mask == 0b110
    assert pairing(Multiform.from_blade(3, mask), x) != 0.0
    assert nondegeneracy_witness(Multivector.zero(3)) is None
