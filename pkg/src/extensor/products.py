"""Metric products: scalar product and left/right contracted products of
multivectors and multiforms, plus the inversion and expansion formulas.

Every product is the composition of the extension (or its inverse) with the
corresponding duality operation; the definitions are the implementation.
"""

from __future__ import annotations

from .algebra import AlgebraError, Multiform, Multivector
from .duality import (
    left_contract_mf,
    left_contract_mv,
    pairing,
    right_contract_mf,
    right_contract_mv,
)
from .metric import MetricExtensor, extend, extend_inverse, pseudoscalars

# e_wedge . e_wedge equals det G and cannot vanish for an admissible metric;
# the floor guards against internal inconsistency, not expected inputs.
_PSEUDO_NORM_FLOOR = 1e-12


class InternalInconsistency(RuntimeError):
    """An invariant the construction guarantees was found violated."""


def scalar_product_mv(gamma: MetricExtensor, x: Multivector, y: Multivector) -> float:
    """x . y = <extend(gamma, x), y>."""
    return pairing(extend(gamma, x), y)


def scalar_product_mf(gamma: MetricExtensor, phi: Multiform, psi: Multiform) -> float:
    """phi . psi = <extend_inverse(gamma, phi), psi>."""
    return pairing(extend_inverse(gamma, phi), psi)


def lcontract_mv(gamma: MetricExtensor, x: Multivector, y: Multivector) -> Multivector:
    """Left contracted product of multivectors: <extend(gamma, x), y|."""
    return left_contract_mv(extend(gamma, x), y)


def rcontract_mv(gamma: MetricExtensor, y: Multivector, x: Multivector) -> Multivector:
    """Right contracted product of multivectors: |y, extend(gamma, x)>."""
    return right_contract_mv(y, extend(gamma, x))


def lcontract_mf(gamma: MetricExtensor, phi: Multiform, psi: Multiform) -> Multiform:
    """Left contracted product of multiforms: <extend_inverse(gamma, phi), psi|."""
    return left_contract_mf(extend_inverse(gamma, phi), psi)


def rcontract_mf(gamma: MetricExtensor, psi: Multiform, phi: Multiform) -> Multiform:
    """Right contracted product of multiforms: |psi, extend_inverse(gamma, phi)>."""
    return right_contract_mf(psi, extend_inverse(gamma, phi))


def _pseudo_norm(gamma: MetricExtensor) -> float:
    ps = pseudoscalars(gamma)
    norm = scalar_product_mv(gamma, ps.e_wedge, ps.e_wedge)
    if abs(norm) <= _PSEUDO_NORM_FLOOR:
        raise InternalInconsistency(
            f"pseudoscalar norm {norm:.3e} vanished for a non-degenerate metric"
        )
    return norm


def invert_metric_via_formula(
    gamma: MetricExtensor, omega: Multiform, variant: int = 1
) -> Multivector:
    """gamma^-1 on a grade-1 form, without forming the inverse matrix.

    variant 1: (1/(e. e)) <omega, e| _| rev(e);  variant 2 swaps which
    pseudoscalar carries the reversion.  Both agree.
    """
    if not omega.is_homogeneous(1):
        raise AlgebraError("invert_metric_via_formula takes a grade-1 multiform")
    return invert_extension_via_formula(gamma, omega, variant)


def invert_extension_via_formula(
    gamma: MetricExtensor, phi: Multiform, variant: int = 1
) -> Multivector:
    """Extension inverse on any multiform via the double-contraction formula."""
    if variant not in (1, 2):
        raise AlgebraError(f"variant must be 1 or 2, got {variant}")
    ps = pseudoscalars(gamma)
    norm = _pseudo_norm(gamma)
    if variant == 1:
        inner = left_contract_mv(phi, ps.e_wedge)
        result = lcontract_mv(gamma, inner, ps.e_wedge.reversion())
    else:
        inner = left_contract_mv(phi, ps.e_wedge.reversion())
        result = lcontract_mv(gamma, inner, ps.e_wedge)
    return (1.0 / norm) * result


def expand_multivector(gamma: MetricExtensor, x: Multivector, variant: int = 1) -> Multivector:
    """Identity map computed through the double contracted product."""
    if variant not in (1, 2):
        raise AlgebraError(f"variant must be 1 or 2, got {variant}")
    ps = pseudoscalars(gamma)
    norm = _pseudo_norm(gamma)
    if variant == 1:
        inner = lcontract_mv(gamma, x, ps.e_wedge)
        result = lcontract_mv(gamma, inner, ps.e_wedge.reversion())
    else:
        inner = lcontract_mv(gamma, x, ps.e_wedge.reversion())
        result = lcontract_mv(gamma, inner, ps.e_wedge)
    return (1.0 / norm) * result


def expand_multiform(gamma: MetricExtensor, phi: Multiform, variant: int = 1) -> Multiform:
    """Multiform counterpart of expand_multivector, through eps_wedge."""
    if variant not in (1, 2):
        raise AlgebraError(f"variant must be 1 or 2, got {variant}")
    ps = pseudoscalars(gamma)
    norm = scalar_product_mf(gamma, ps.eps_wedge, ps.eps_wedge)
    if abs(norm) <= _PSEUDO_NORM_FLOOR:
        raise InternalInconsistency(
            f"dual pseudoscalar norm {norm:.3e} vanished for a non-degenerate metric"
        )
    if variant == 1:
        inner = lcontract_mf(gamma, phi, ps.eps_wedge)
        result = lcontract_mf(gamma, inner, ps.eps_wedge.reversion())
    else:
        # symmetric reading of the second printed variant: the reversion
        # moves to the inner pseudoscalar
        inner = lcontract_mf(gamma, phi, ps.eps_wedge.reversion())
        result = lcontract_mf(gamma, inner, ps.eps_wedge)
    return (1.0 / norm) * result
