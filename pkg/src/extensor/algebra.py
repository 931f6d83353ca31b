"""Blade-coordinate multivectors and multiforms.

Elements of the exterior algebra over an n-dimensional real vector space
(and its dual) are stored as dense vectors of 2**n coefficients, one per
canonical basis blade.  A blade is named by a bitmask over the positions
1..n; bit (j-1) set means basis vector e_j (or dual form d_j) is a factor,
and the canonical blade has its factors in strictly increasing index order.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MAX_DIM = 12


class AlgebraError(ValueError):
    """Domain error in an algebraic operation."""


class DimensionMismatch(AlgebraError):
    """Operands live over spaces of different dimension."""


class KindMismatch(AlgebraError):
    """A multivector was used where a multiform is required, or vice versa."""


def check_dimension(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= MAX_DIM:
        raise AlgebraError(f"dimension must be an integer in 1..{MAX_DIM}, got {n!r}")
    return int(n)


@lru_cache(maxsize=None)
def _popcount_table(n: int) -> np.ndarray:
    """popcount of every mask below 2**n, as a read-only int array."""
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for _ in range(n):
        counts += masks & 1
        masks >>= 1
    counts.flags.writeable = False
    return counts


@lru_cache(maxsize=None)
def _grade_signs(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-mask sign vectors for grade involution and reversion."""
    g = _popcount_table(n)
    invol = np.where(g % 2 == 0, 1.0, -1.0)
    rever = np.where((g * (g - 1) // 2) % 2 == 0, 1.0, -1.0)
    invol.flags.writeable = False
    rever.flags.writeable = False
    return invol, rever


def grade_of_mask(mask: int) -> int:
    return int(mask).bit_count()


def mask_bits(mask: int) -> list[int]:
    """0-based positions of the set bits, in increasing order."""
    return [j for j in range(mask.bit_length()) if mask >> j & 1]


def mask_from_indices(n: int, indices) -> int:
    mask = 0
    for j in indices:
        if not 1 <= j <= n:
            raise AlgebraError(f"basis index {j} out of range 1..{n}")
        bit = 1 << (j - 1)
        if mask & bit:
            raise AlgebraError(f"repeated basis index {j} in blade")
        mask |= bit
    return mask


def merge_sign(a: int, b_masks: np.ndarray, n: int) -> np.ndarray:
    """Sign of reordering the concatenated factor list of e_a followed by e_b.

    Counts pairs (i in a, j in b) with i > j, i.e. the transpositions needed
    to merge-sort the index lists; vectorized over an array of b masks.
    """
    pc = _popcount_table(n)
    swaps = np.zeros(b_masks.shape, dtype=np.int64)
    rem = a
    while rem:
        low = rem & -rem
        swaps += pc[b_masks & (low - 1)]
        rem ^= low
    return np.where(swaps % 2 == 0, 1.0, -1.0)


def merge_sign_rev(b_masks: np.ndarray, a: int, n: int) -> np.ndarray:
    """Like merge_sign but with the array operand first: e_b followed by e_a."""
    pc = _popcount_table(n)
    full = (1 << n) - 1
    swaps = np.zeros(b_masks.shape, dtype=np.int64)
    rem = a
    while rem:
        low = rem & -rem
        above = full & ~(2 * low - 1)
        swaps += pc[b_masks & above]
        rem ^= low
    return np.where(swaps % 2 == 0, 1.0, -1.0)


class _GradedElement:
    """Common storage and grade machinery for multivectors and multiforms."""

    __slots__ = ("n", "coeffs")

    _basis_symbol = "?"

    def __init__(self, n: int, coeffs=None):
        n = check_dimension(n)
        if coeffs is None:
            data = np.zeros(1 << n)
        else:
            data = np.asarray(coeffs, dtype=float)
            if data.shape != (1 << n,):
                raise AlgebraError(
                    f"expected {1 << n} blade coefficients for n={n}, got shape {data.shape}"
                )
            if not np.all(np.isfinite(data)):
                raise AlgebraError("blade coefficients must be finite")
            data = data.copy()
        data.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @classmethod
    def scalar(cls, n: int, value: float):
        data = np.zeros(1 << check_dimension(n))
        data[0] = value
        return cls(n, data)

    @classmethod
    def from_blade(cls, n: int, mask: int, coefficient: float = 1.0):
        n = check_dimension(n)
        if not 0 <= mask < (1 << n):
            raise AlgebraError(f"blade mask {mask} out of range for n={n}")
        data = np.zeros(1 << n)
        data[mask] = coefficient
        return cls(n, data)

    @classmethod
    def basis_blade(cls, n: int, *indices: int):
        """Canonical blade with the given 1-based factor indices."""
        return cls.from_blade(n, mask_from_indices(n, indices))

    # -- grade structure ---------------------------------------------------

    def grade(self, p: int):
        """Grade-p part as an element of the full algebra."""
        if not 0 <= p <= self.n:
            raise AlgebraError(f"grade {p} out of range 0..{self.n}")
        keep = _popcount_table(self.n) == p
        return type(self)(self.n, np.where(keep, self.coeffs, 0.0))

    def grades(self) -> list[int]:
        """Grades with a nonzero component."""
        pc = _popcount_table(self.n)
        return sorted({int(pc[m]) for m in np.nonzero(self.coeffs)[0]})

    def is_homogeneous(self, p: int, tol: float = 0.0) -> bool:
        keep = _popcount_table(self.n) == p
        return bool(np.all(np.abs(np.where(keep, 0.0, self.coeffs)) <= tol))

    def involution(self):
        """Grade involution: grade-p part scaled by (-1)**p."""
        sign, _ = _grade_signs(self.n)
        return type(self)(self.n, self.coeffs * sign)

    def reversion(self):
        """Reversion: grade-p part scaled by (-1)**(p*(p-1)/2)."""
        _, sign = _grade_signs(self.n)
        return type(self)(self.n, self.coeffs * sign)

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other):
        if type(other) is not type(self):
            raise KindMismatch(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.n != self.n:
            raise DimensionMismatch(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check_same(other)
        return type(self)(self.n, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_same(other)
        return type(self)(self.n, self.coeffs - other.coeffs)

    def __neg__(self):
        return type(self)(self.n, -self.coeffs)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, float, np.floating, np.integer)):
            return NotImplemented
        return type(self)(self.n, self.coeffs * float(scalar))

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.n == self.n
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.coeffs.tobytes()))

    def allclose(self, other, rtol: float = 1e-9, atol: float = 1e-12) -> bool:
        self._check_same(other)
        return bool(np.allclose(self.coeffs, other.coeffs, rtol=rtol, atol=atol))

    def norm_inf(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    # -- display -----------------------------------------------------------

    def _blade_name(self, mask: int) -> str:
        if mask == 0:
            return ""
        return self._basis_symbol + "".join(str(j + 1) for j in mask_bits(mask))

    def __repr__(self):
        terms = []
        for mask in np.nonzero(self.coeffs)[0]:
            c = self.coeffs[mask]
            name = self._blade_name(int(mask))
            if name:
                terms.append(f"{c:g}*{name}")
            else:
                terms.append(f"{c:g}")
        body = " + ".join(terms) if terms else "0"
        return f"{type(self).__name__}({self.n}: {body})"


class Multivector(_GradedElement):
    """Element of the exterior algebra over V (contravariant)."""

    __slots__ = ()
    _basis_symbol = "e"


class Multiform(_GradedElement):
    """Element of the exterior algebra over V* (covariant)."""

    __slots__ = ()
    _basis_symbol = "d"


def grade_project(a: _GradedElement, p: int) -> _GradedElement:
    """Grade-p component, kept inside the full algebra."""
    return a.grade(p)


def include(a: _GradedElement, p: int) -> _GradedElement:
    """Embed grade-p data into the full algebra.

    The input must carry grade-p coefficients only; the result is the
    p-homogeneous element with those coefficients.
    """
    if not 0 <= p <= a.n:
        raise AlgebraError(f"grade {p} out of range 0..{a.n}")
    if not a.is_homogeneous(p):
        raise AlgebraError(f"input carries data outside grade {p}")
    return type(a)(a.n, a.coeffs)


def wedge(a: _GradedElement, b: _GradedElement) -> _GradedElement:
    """Exterior product of two multivectors or two multiforms."""
    a._check_same(b)
    n = a.n
    masks = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n)
    for am in np.nonzero(a.coeffs)[0]:
        am = int(am)
        disjoint = (masks & am) == 0
        bm = masks[disjoint]
        sign = merge_sign(am, bm, n)
        out[am | bm] += a.coeffs[am] * sign * b.coeffs[bm]
    return type(a)(n, out)


def wedge_blade_masks(a_mask: int, b_mask: int) -> tuple[int, float]:
    """(mask, sign) of e_A ^ e_B on canonical blades; sign 0 when A and B meet."""
    if a_mask & b_mask:
        return 0, 0.0
    sign = merge_sign(a_mask, np.array([b_mask], dtype=np.int64), max(1, (a_mask | b_mask).bit_length()))
    return a_mask | b_mask, float(sign[0])


def _minor_block(matrix: np.ndarray, row_masks: list[int], col_masks: list[int]) -> np.ndarray:
    """Dense matrix of p x p minors det(matrix[rows(K), cols(J)])."""
    p = grade_of_mask(row_masks[0]) if row_masks else 0
    if p == 0:
        return np.ones((1, 1))
    rows = np.array([mask_bits(m) for m in row_masks], dtype=np.intp)
    cols = np.array([mask_bits(m) for m in col_masks], dtype=np.intp)
    nr, nc = len(row_masks), len(col_masks)
    block = np.empty((nr, nc))
    # chunk over rows so the stacked (chunk*nc, p, p) det batch stays small
    chunk = max(1, int(2_000_000 // max(1, nc * p * p)))
    for start in range(0, nr, chunk):
        r = rows[start : start + chunk]
        mats = matrix[r[:, None, :, None], cols[None, :, None, :]]
        block[start : start + chunk] = np.linalg.det(mats)
    return block


@lru_cache(maxsize=None)
def _grade_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """Masks below 2**n bucketed by grade, each bucket in increasing mask order."""
    pc = _popcount_table(n)
    return tuple(
        tuple(int(m) for m in np.nonzero(pc == p)[0]) for p in range(n + 1)
    )


def lift_matrix(matrix: np.ndarray, n: int) -> np.ndarray:
    """Grade-wise exterior-power lift of a linear map on coefficient vectors.

    Given the grade-1 action c' = matrix @ c, returns the (2**n, 2**n)
    block-diagonal matrix whose (K, J) entry is det(matrix[K, J]), acting on
    full blade-coefficient vectors.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (n, n):
        raise AlgebraError(f"expected an {n}x{n} matrix, got shape {matrix.shape}")
    out = np.zeros((1 << n, 1 << n))
    out[0, 0] = 1.0
    for p in range(1, n + 1):
        bucket = list(_grade_masks(n)[p])
        block = _minor_block(matrix, bucket, bucket)
        out[np.ix_(bucket, bucket)] = block
    return out


def apply_lift(matrix: np.ndarray, coeffs: np.ndarray, n: int) -> np.ndarray:
    """Apply the exterior-power lift of `matrix` without building it densely.

    Skips grades with no nonzero input coefficients; used where the full
    2**n x 2**n lift would be wasteful.
    """
    out = np.zeros_like(coeffs)
    out[0] = coeffs[0]
    for p in range(1, n + 1):
        bucket = list(_grade_masks(n)[p])
        sub = coeffs[bucket]
        if not np.any(sub):
            continue
        cols = [m for m, c in zip(bucket, sub) if c != 0.0]
        block = _minor_block(matrix, bucket, cols)
        out[bucket] = block @ coeffs[cols]
    return out


_SINGULAR_TOL = 1e-10


def change_basis(a: _GradedElement, matrix: np.ndarray) -> _GradedElement:
    """Re-express `a` in the basis e'_j = sum_k matrix[j, k] e_k.

    Multivector coefficients transform with the inverse transpose of the
    grade-1 change, multiform coefficients with the matrix itself, so the
    duality pairing is preserved.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.shape != (a.n, a.n):
        raise AlgebraError(f"expected an {a.n}x{a.n} matrix, got shape {matrix.shape}")
    det = np.linalg.det(matrix)
    if abs(det) <= _SINGULAR_TOL:
        raise AlgebraError(f"basis change matrix is singular (|det| = {abs(det):.3e})")
    if isinstance(a, Multivector):
        action = np.linalg.inv(matrix).T
    else:
        action = matrix
    return type(a)(a.n, lift_matrix(action, a.n) @ a.coeffs)
