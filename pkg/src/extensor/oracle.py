"""Definition-literal brute force over full antisymmetric tensor components.

Ground truth for the blade implementation at small dimension: grade-p
elements are stored as full n**p component arrays, operations are evaluated
as the defining sums over all index tuples.  Capped at n <= 4; this module
exists to pin signs and normalizations, not to scale.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .algebra import AlgebraError, Multiform, Multivector, mask_bits

MAX_ORACLE_DIM = 4
_ANTISYMMETRY_TOL = 1e-12


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_antisymmetric(components: np.ndarray, p: int):
    if p < 2:
        return
    for axis in range(p - 1):
        swapped = np.swapaxes(components, axis, axis + 1)
        if np.max(np.abs(components + swapped)) > _ANTISYMMETRY_TOL:
            raise AlgebraError("tensor components are not antisymmetric")


class _TensorElement:
    """Fully antisymmetric grade-p tensor over an n-dimensional space."""

    __slots__ = ("n", "p", "components")

    def __init__(self, n: int, p: int, components):
        if not 1 <= n <= MAX_ORACLE_DIM:
            raise AlgebraError(f"oracle dimension must be in 1..{MAX_ORACLE_DIM}")
        if not 0 <= p <= n:
            raise AlgebraError(f"grade {p} out of range 0..{n}")
        comp = np.asarray(components, dtype=float)
        if comp.shape != (n,) * p:
            raise AlgebraError(f"expected shape {(n,) * p}, got {comp.shape}")
        _check_antisymmetric(comp, p)
        self.n = n
        self.p = p
        self.components = comp

    def reversion(self):
        sign = -1.0 if (self.p * (self.p - 1) // 2) % 2 else 1.0
        return type(self)(self.n, self.p, sign * self.components)


class TensorPVector(_TensorElement):
    """Skew-symmetric p-contravariant tensor; entry (j1..jp) = x(d_j1,..,d_jp)."""


class TensorPForm(_TensorElement):
    """Skew-symmetric p-covariant tensor; entry (j1..jp) = phi(e_j1,..,e_jp)."""


def _check_compatible(a: _TensorElement, b: _TensorElement, same_grade=True):
    if a.n != b.n:
        raise AlgebraError(f"dimension mismatch: {a.n} vs {b.n}")
    if same_grade and a.p != b.p:
        raise AlgebraError(f"grade mismatch: {a.p} vs {b.p}")


def tensor_pairing(phi: TensorPForm, x: TensorPVector) -> float:
    """Sum over all n**p index tuples with the 1/p! factor."""
    if not isinstance(phi, TensorPForm) or not isinstance(x, TensorPVector):
        raise AlgebraError("tensor_pairing expects (TensorPForm, TensorPVector)")
    _check_compatible(phi, x)
    if phi.p == 0:
        return float(phi.components) * float(x.components)
    return float(np.sum(phi.components * x.components)) / math.factorial(phi.p)


def _wedge_components(a: np.ndarray, pa: int, b: np.ndarray, pb: int, n: int) -> np.ndarray:
    """Antisymmetrized tensor product with the 1/(p!q!) normalization.

    The combinatorial constant is the one that makes the pairing of wedges
    equal the determinant of the grade-1 pairings (validated by the
    blade/tensor cross tests).
    """
    p = pa + pb
    if p == 0:
        return np.asarray(a * b)
    prod = np.multiply.outer(a, b).reshape((n,) * p)
    out = np.zeros_like(prod)
    for perm in itertools.permutations(range(p)):
        out += _perm_sign(perm) * np.transpose(prod, perm)
    return out / (math.factorial(pa) * math.factorial(pb))


def tensor_wedge(a: _TensorElement, b: _TensorElement) -> _TensorElement:
    if type(a) is not type(b):
        raise AlgebraError("tensor_wedge operands must be of the same kind")
    _check_compatible(a, b, same_grade=False)
    if a.p + b.p > a.n:
        raise AlgebraError(f"wedge grade {a.p + b.p} exceeds dimension {a.n}")
    return type(a)(a.n, a.p + b.p, _wedge_components(a.components, a.p, b.components, b.p, a.n))


def _basis_vector(n: int, j: int) -> np.ndarray:
    one_hot = np.zeros(n)
    one_hot[j] = 1.0
    return one_hot


def tensor_left_contraction(phi: TensorPForm, x: TensorPVector) -> TensorPVector:
    """Defining sum evaluated literally with the canonical bases."""
    if not isinstance(phi, TensorPForm) or not isinstance(x, TensorPVector):
        raise AlgebraError("tensor_left_contraction expects (TensorPForm, TensorPVector)")
    _check_compatible(phi, x, same_grade=False)
    p, q, n = phi.p, x.p, x.n
    if p > q:
        raise AlgebraError(f"contractor grade {p} exceeds target grade {q}")
    rev = phi.reversion()
    if p == q:
        return TensorPVector(n, 0, tensor_pairing(rev, x))
    r = q - p
    out = np.zeros((n,) * r)
    for js in itertools.product(range(n), repeat=r):
        form = rev
        vector = None
        for j in js:
            form = tensor_wedge(form, TensorPForm(n, 1, _basis_vector(n, j)))
            unit = TensorPVector(n, 1, _basis_vector(n, j))
            vector = unit if vector is None else tensor_wedge(vector, unit)
        coeff = tensor_pairing(form, x)
        out += coeff * vector.components
    return TensorPVector(n, r, out / math.factorial(r))


def tensor_right_contraction(x: TensorPVector, phi: TensorPForm) -> TensorPVector:
    """Right contraction with the reversed contractor wedged on the right."""
    if not isinstance(x, TensorPVector) or not isinstance(phi, TensorPForm):
        raise AlgebraError("tensor_right_contraction expects (TensorPVector, TensorPForm)")
    _check_compatible(phi, x, same_grade=False)
    p, q, n = phi.p, x.p, x.n
    if p > q:
        raise AlgebraError(f"contractor grade {p} exceeds target grade {q}")
    rev = phi.reversion()
    if p == q:
        return TensorPVector(n, 0, tensor_pairing(rev, x))
    r = q - p
    out = np.zeros((n,) * r)
    for js in itertools.product(range(n), repeat=r):
        form = None
        vector = None
        for j in js:
            unit_f = TensorPForm(n, 1, _basis_vector(n, j))
            form = unit_f if form is None else tensor_wedge(form, unit_f)
            unit_v = TensorPVector(n, 1, _basis_vector(n, j))
            vector = unit_v if vector is None else tensor_wedge(vector, unit_v)
        coeff = tensor_pairing(tensor_wedge(form, rev), x)
        out += coeff * vector.components
    return TensorPVector(n, r, out / math.factorial(r))


def tensor_left_contraction_forms(x: TensorPVector, phi: TensorPForm) -> TensorPForm:
    """Mirror of tensor_left_contraction with vector and form roles exchanged."""
    mirrored = tensor_left_contraction(
        TensorPForm(x.n, x.p, x.components), TensorPVector(phi.n, phi.p, phi.components)
    )
    return TensorPForm(mirrored.n, mirrored.p, mirrored.components)


def tensor_right_contraction_forms(phi: TensorPForm, x: TensorPVector) -> TensorPForm:
    """Mirror of tensor_right_contraction with vector and form roles exchanged."""
    mirrored = tensor_right_contraction(
        TensorPVector(phi.n, phi.p, phi.components), TensorPForm(x.n, x.p, x.components)
    )
    return TensorPForm(mirrored.n, mirrored.p, mirrored.components)


def _blade_to_components(n: int, grade_coeffs: dict[int, float], p: int) -> np.ndarray:
    out = np.zeros((n,) * p) if p else np.zeros(())
    for mask, coeff in grade_coeffs.items():
        bits = mask_bits(mask)
        if p == 0:
            out += coeff
            continue
        for perm in itertools.permutations(range(p)):
            idx = tuple(bits[k] for k in perm)
            out[idx] = _perm_sign(perm) * coeff
    return out


def blade_to_tensor(element, p: int):
    """Grade-p part of a blade element as full tensor components."""
    n = element.n
    coeffs = {}
    for mask in np.nonzero(element.coeffs)[0]:
        mask = int(mask)
        if mask.bit_count() == p:
            coeffs[mask] = float(element.coeffs[mask])
    comp = _blade_to_components(n, coeffs, p)
    cls = TensorPVector if isinstance(element, Multivector) else TensorPForm
    return cls(n, p, comp)


def tensor_to_blade(tensor: _TensorElement):
    """Blade element whose e_J coefficient is the component at increasing J."""
    n, p = tensor.n, tensor.p
    data = np.zeros(1 << n)
    if p == 0:
        data[0] = float(tensor.components)
    else:
        for combo in itertools.combinations(range(n), p):
            mask = 0
            for j in combo:
                mask |= 1 << j
            data[mask] = tensor.components[combo]
    cls = Multivector if isinstance(tensor, TensorPVector) else Multiform
    return cls(n, data)
