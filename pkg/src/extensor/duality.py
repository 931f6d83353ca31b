"""Metric-free duality structure: pairing and left/right contractions.

On canonical blades the pairing is the Kronecker delta, so the pairing of a
multiform with a multivector is the plain dot product of their coefficient
vectors.  The contraction blade coefficients are +-1 permutation signs
obtained by evaluating the defining pairing itself: for the left contraction,
<d_A, e_B| = c * e_{B\\A} with c the coefficient of d_B in rev(d_A) ^ d_{B\\A}.
The per-dimension sign rows are memoized and read-only afterwards.
"""

from __future__ import annotations

import numpy as np

from .algebra import (
    DimensionMismatch,
    KindMismatch,
    Multiform,
    Multivector,
    _popcount_table,
    merge_sign,
    merge_sign_rev,
)


def _check_pair(phi, x):
    if phi.n != x.n:
        raise DimensionMismatch(f"dimension mismatch: {phi.n} vs {x.n}")


def _reversion_sign(p: int) -> float:
    return -1.0 if (p * (p - 1) // 2) % 2 else 1.0


class SignCache:
    """Per-dimension memo of contraction sign rows over superset masks.

    For a fixed contractor mask `a`, row[b] is the blade sign of contracting
    d_a out of e_b (zero unless a is a subset of b).  Rows are built on first
    use; once built they are never mutated, so concurrent readers are safe.
    """

    def __init__(self, n: int):
        self.n = n
        self.masks = np.arange(1 << n, dtype=np.int64)
        self._left: dict[int, np.ndarray] = {}
        self._right: dict[int, np.ndarray] = {}

    def left_row(self, a: int) -> np.ndarray:
        row = self._left.get(a)
        if row is None:
            # c = pairing(rev(d_a) ^ d_{b\a}, e_b): reversion sign of d_a
            # times the reordering sign of the factor merge a then b\a.
            superset = (self.masks & a) == a
            rest = self.masks & ~a
            row = np.where(superset, merge_sign(a, rest, self.n), 0.0)
            row *= _reversion_sign(int(a).bit_count())
            row.flags.writeable = False
            self._left[a] = row
        return row

    def right_row(self, a: int) -> np.ndarray:
        row = self._right.get(a)
        if row is None:
            # c' = pairing(d_{b\a} ^ rev(d_a), e_b)
            superset = (self.masks & a) == a
            rest = self.masks & ~a
            row = np.where(superset, merge_sign_rev(rest, a, self.n), 0.0)
            row *= _reversion_sign(int(a).bit_count())
            row.flags.writeable = False
            self._right[a] = row
        return row


_caches: dict[int, SignCache] = {}


def sign_cache(n: int) -> SignCache:
    cache = _caches.get(n)
    if cache is None:
        cache = _caches.setdefault(n, SignCache(n))
    return cache


def pairing(a, b) -> float:
    """Duality pairing of a multiform with a multivector (either order)."""
    if isinstance(a, Multiform) and isinstance(b, Multivector):
        phi, x = a, b
    elif isinstance(a, Multivector) and isinstance(b, Multiform):
        phi, x = b, a
    else:
        raise KindMismatch(
            f"pairing needs one multiform and one multivector, got "
            f"{type(a).__name__} and {type(b).__name__}"
        )
    _check_pair(phi, x)
    return float(phi.coeffs @ x.coeffs)


def _contract(contractor: np.ndarray, target: np.ndarray, n: int, side: str) -> np.ndarray:
    cache = sign_cache(n)
    masks = cache.masks
    out = np.zeros_like(target)
    for am in np.nonzero(contractor)[0]:
        am = int(am)
        row = cache.left_row(am) if side == "left" else cache.right_row(am)
        sup = masks[(masks & am) == am]
        out[sup & ~am] += contractor[am] * row[sup] * target[sup]
    return out


def left_contract_mv(phi: Multiform, x: Multivector) -> Multivector:
    """Left contraction of a multivector by a multiform: <phi, x|."""
    if not isinstance(phi, Multiform) or not isinstance(x, Multivector):
        raise KindMismatch("left_contract_mv expects (Multiform, Multivector)")
    _check_pair(phi, x)
    return Multivector(x.n, _contract(phi.coeffs, x.coeffs, x.n, "left"))


def right_contract_mv(x: Multivector, phi: Multiform) -> Multivector:
    """Right contraction of a multivector by a multiform: |x, phi>."""
    if not isinstance(x, Multivector) or not isinstance(phi, Multiform):
        raise KindMismatch("right_contract_mv expects (Multivector, Multiform)")
    _check_pair(phi, x)
    return Multivector(x.n, _contract(phi.coeffs, x.coeffs, x.n, "right"))


def left_contract_mf(x: Multivector, phi: Multiform) -> Multiform:
    """Left contraction of a multiform by a multivector: <x, phi|."""
    if not isinstance(x, Multivector) or not isinstance(phi, Multiform):
        raise KindMismatch("left_contract_mf expects (Multivector, Multiform)")
    _check_pair(phi, x)
    return Multiform(x.n, _contract(x.coeffs, phi.coeffs, x.n, "left"))


def right_contract_mf(phi: Multiform, x: Multivector) -> Multiform:
    """Right contraction of a multiform by a multivector: |phi, x>."""
    if not isinstance(phi, Multiform) or not isinstance(x, Multivector):
        raise KindMismatch("right_contract_mf expects (Multiform, Multivector)")
    _check_pair(phi, x)
    return Multiform(x.n, _contract(x.coeffs, phi.coeffs, x.n, "right"))


def nondegeneracy_witness(a) -> int | None:
    """Mask of a canonical dual blade with nonzero pairing against `a`.

    Returns None only for the zero element; existence for nonzero inputs is
    the non-degeneracy of the pairing.
    """
    idx = int(np.argmax(np.abs(a.coeffs)))
    return idx if a.coeffs[idx] != 0.0 else None
