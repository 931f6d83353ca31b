"""Seeded random inputs for the identity suite and the tests.

Blade coefficients are drawn uniformly from [-1, 1] so every blade is
exercised with nonzero probability; homogeneous inputs mask a random draw
down to a single grade.  Metrics are A + A^T + d*I with A uniform, resampled
until they are comfortably non-degenerate, which covers indefinite
signatures as well as positive-definite ones.
"""

from __future__ import annotations

import numpy as np

from .algebra import Multiform, Multivector, _popcount_table
from .metric import MetricExtensor

_MIN_DET = 1e-3
_MAX_COND = 1e6


def random_multivector(rng: np.random.Generator, n: int) -> Multivector:
    return Multivector(n, rng.uniform(-1.0, 1.0, 1 << n))


def random_multiform(rng: np.random.Generator, n: int) -> Multiform:
    return Multiform(n, rng.uniform(-1.0, 1.0, 1 << n))


def random_homogeneous(rng: np.random.Generator, n: int, p: int, cls=Multivector):
    keep = _popcount_table(n) == p
    return cls(n, np.where(keep, rng.uniform(-1.0, 1.0, 1 << n), 0.0))


def random_vectors(rng: np.random.Generator, n: int, count: int, cls=Multivector) -> list:
    return [random_homogeneous(rng, n, 1, cls) for _ in range(count)]


def random_metric_matrix(rng: np.random.Generator, n: int, min_det: float = _MIN_DET) -> np.ndarray:
    while True:
        a = rng.uniform(-1.0, 1.0, (n, n))
        d = rng.uniform(-2.0, 2.0)
        g = a + a.T + d * np.eye(n)
        if abs(np.linalg.det(g)) > min_det and np.linalg.cond(g) < _MAX_COND:
            return g


def random_metric(rng: np.random.Generator, n: int, min_det: float = _MIN_DET) -> MetricExtensor:
    return MetricExtensor(n, random_metric_matrix(rng, n, min_det))
