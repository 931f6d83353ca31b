"""Metric tensors, metric extensors, their extension to all grades,
reciprocal bases and the four pseudoscalars.

A metric extensor is stored as the matrix G of the grade-1 action
gamma(e_j) = G[j, k] d_k together with its inverse.  The extension to grade
p acts by p x p minors of G (the p-th compound matrix); the full lift and
its inverse are cached on first use and read-only afterwards.
"""

from __future__ import annotations

import itertools

import numpy as np

from .algebra import (
    AlgebraError,
    DimensionMismatch,
    Multiform,
    Multivector,
    apply_lift,
    check_dimension,
    lift_matrix,
    mask_from_indices,
)

_SYMMETRY_TOL = 1e-12
_DEGENERACY_TOL = 1e-10

# Lift matrices above this dimension are too large to cache densely; fall
# back to per-call minor evaluation that skips zero input coefficients.
_DENSE_LIFT_MAX_DIM = 10


def _validate_metric_matrix(matrix, n: int) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (n, n):
        raise AlgebraError(f"expected an {n}x{n} metric matrix, got shape {matrix.shape}")
    asym = float(np.max(np.abs(matrix - matrix.T))) if n > 0 else 0.0
    if asym > _SYMMETRY_TOL:
        raise AlgebraError(f"metric matrix is not symmetric (max asymmetry {asym:.3e})")
    # determinant via LAPACK's partial-pivot LU; the threshold implements
    # "non-degenerate" operationally
    det = float(np.linalg.det(matrix))
    if abs(det) <= _DEGENERACY_TOL:
        raise AlgebraError(f"metric matrix is degenerate (|det| = {abs(det):.3e})")
    sym = 0.5 * (matrix + matrix.T)
    sym.flags.writeable = False
    return sym


class MetricTensor:
    """Symmetric non-degenerate bilinear form g on V, as its Gram matrix."""

    __slots__ = ("n", "matrix")

    def __init__(self, n: int, matrix):
        n = check_dimension(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", _validate_metric_matrix(matrix, n))

    def __setattr__(self, name, value):
        raise AttributeError("MetricTensor is immutable")

    def __call__(self, v: Multivector, w: Multivector) -> float:
        """g(v, w) on grade-1 multivectors."""
        for arg in (v, w):
            if not isinstance(arg, Multivector) or not arg.is_homogeneous(1):
                raise AlgebraError("metric tensor arguments must be grade-1 multivectors")
            if arg.n != self.n:
                raise DimensionMismatch(f"dimension mismatch: {self.n} vs {arg.n}")
        return float(_vector_coords(v) @ self.matrix @ _vector_coords(w))

    def __repr__(self):
        return f"MetricTensor(n={self.n})"


def _vector_coords(v) -> np.ndarray:
    return np.array([v.coeffs[1 << j] for j in range(v.n)])


def _vector_from_coords(cls, n: int, coords) -> Multivector | Multiform:
    data = np.zeros(1 << n)
    for j, c in enumerate(coords):
        data[1 << j] = c
    return cls(n, data)


class MetricExtensor:
    """Symmetric invertible linear map V -> V*, with its grade-wise extension."""

    __slots__ = ("n", "matrix", "inverse", "_lift", "_lift_inv")

    def __init__(self, n: int, matrix):
        n = check_dimension(n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "matrix", _validate_metric_matrix(matrix, n))
        inv = np.linalg.inv(self.matrix)
        inv = 0.5 * (inv + inv.T)
        inv.flags.writeable = False
        object.__setattr__(self, "inverse", inv)
        object.__setattr__(self, "_lift", None)
        object.__setattr__(self, "_lift_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("MetricExtensor is immutable")

    def __repr__(self):
        return f"MetricExtensor(n={self.n})"

    def __call__(self, v: Multivector) -> Multiform:
        """Grade-1 action gamma(v)."""
        if not isinstance(v, Multivector) or not v.is_homogeneous(1):
            raise AlgebraError("the unextended extensor acts on grade-1 multivectors")
        return _vector_from_coords(Multiform, self.n, self.matrix @ _vector_coords(v))

    def apply_inverse(self, omega: Multiform) -> Multivector:
        """Grade-1 action of gamma^-1."""
        if not isinstance(omega, Multiform) or not omega.is_homogeneous(1):
            raise AlgebraError("the inverse extensor acts on grade-1 multiforms")
        return _vector_from_coords(Multivector, self.n, self.inverse @ _vector_coords(omega))

    def _get_lift(self, inverse: bool) -> np.ndarray | None:
        if self.n > _DENSE_LIFT_MAX_DIM:
            return None
        slot = "_lift_inv" if inverse else "_lift"
        cached = getattr(self, slot)
        if cached is None:
            cached = lift_matrix(self.inverse if inverse else self.matrix, self.n)
            cached.flags.writeable = False
            object.__setattr__(self, slot, cached)
        return cached


def extensor_from_tensor(g: MetricTensor) -> MetricExtensor:
    """The unique extensor with <gamma(v), w> = g(v, w)."""
    return MetricExtensor(g.n, g.matrix)


def tensor_from_extensor(gamma: MetricExtensor) -> MetricTensor:
    """The metric tensor g(v, w) = <gamma(v), w>."""
    return MetricTensor(gamma.n, gamma.matrix)


def extend(gamma: MetricExtensor, x: Multivector) -> Multiform:
    """Grade-wise extension: blade e_J maps to gamma(e_j1) ^ ... ^ gamma(e_jp).

    Scalars are copied unchanged; the grade-p coefficients are p x p minors
    of the extensor matrix.
    """
    if not isinstance(x, Multivector):
        raise AlgebraError("extend acts on multivectors")
    if x.n != gamma.n:
        raise DimensionMismatch(f"dimension mismatch: {gamma.n} vs {x.n}")
    lift = gamma._get_lift(inverse=False)
    if lift is not None:
        return Multiform(x.n, lift @ x.coeffs)
    return Multiform(x.n, apply_lift(gamma.matrix, x.coeffs, x.n))


def extend_inverse(gamma: MetricExtensor, phi: Multiform) -> Multivector:
    """Extension of gamma^-1, which is the inverse of the extension."""
    if not isinstance(phi, Multiform):
        raise AlgebraError("extend_inverse acts on multiforms")
    if phi.n != gamma.n:
        raise DimensionMismatch(f"dimension mismatch: {gamma.n} vs {phi.n}")
    lift = gamma._get_lift(inverse=True)
    if lift is not None:
        return Multivector(phi.n, lift @ phi.coeffs)
    return Multivector(phi.n, apply_lift(gamma.inverse, phi.coeffs, phi.n))


def reciprocal_basis(gamma: MetricExtensor) -> tuple[list[Multivector], list[Multiform]]:
    """Reciprocal vectors e^j = gamma^-1(d_j) and forms d_j-bar = gamma(e_j)."""
    n = gamma.n
    vectors = [
        _vector_from_coords(Multivector, n, gamma.inverse[j]) for j in range(n)
    ]
    forms = [_vector_from_coords(Multiform, n, gamma.matrix[j]) for j in range(n)]
    return vectors, forms


class PseudoscalarSet:
    """The four top-grade elements induced by a metric extensor."""

    __slots__ = ("e_wedge", "eps_wedge", "e_wedge_up", "eps_wedge_down")

    def __init__(self, gamma: MetricExtensor):
        n = gamma.n
        top = (1 << n) - 1
        e_wedge = Multivector.from_blade(n, top)
        eps_wedge = Multiform.from_blade(n, top)
        object.__setattr__(self, "e_wedge", e_wedge)
        object.__setattr__(self, "eps_wedge", eps_wedge)
        object.__setattr__(self, "e_wedge_up", extend_inverse(gamma, eps_wedge))
        object.__setattr__(self, "eps_wedge_down", extend(gamma, e_wedge))

    def __setattr__(self, name, value):
        raise AttributeError("PseudoscalarSet is immutable")


def pseudoscalars(gamma: MetricExtensor) -> PseudoscalarSet:
    return PseudoscalarSet(gamma)


def generalized_permutation_symbol(upper: tuple[int, ...], lower: tuple[int, ...]) -> float:
    """det of the Kronecker-delta matrix delta_lower^upper."""
    if len(upper) != len(lower):
        return 0.0
    p = len(upper)
    if p == 0:
        return 1.0
    delta = np.array([[1.0 if j == k else 0.0 for j in lower] for k in upper])
    return float(np.linalg.det(delta))


def blade_of_vectors(vectors: list) -> Multivector | Multiform:
    """Wedge of grade-1 elements, in the given order."""
    from .algebra import wedge

    result = vectors[0]
    for v in vectors[1:]:
        result = wedge(result, v)
    return result


def all_index_tuples(n: int, p: int, increasing: bool = True):
    """Index tuples from {1..n}; increasing combinations or all arrangements."""
    if increasing:
        return itertools.combinations(range(1, n + 1), p)
    return itertools.product(range(1, n + 1), repeat=p)


def blade_mask(n: int, indices) -> int:
    return mask_from_indices(n, indices)
