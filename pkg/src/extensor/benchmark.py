"""Wall-clock micro-benchmarks for the core operations.

Inputs are drawn once per entry from a seeded generator, so repeated runs
time the same workload.  Each entry reports min/median/max seconds over the
requested number of runs plus the number of nonzero blade coefficients the
operation touched, one machine-readable line per entry.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .algebra import wedge
from .duality import left_contract_mv
from .metric import MetricExtensor, extend
from .products import invert_extension_via_formula, scalar_product_mv
from .sampling import random_multiform, random_multivector

MIN_RUNS = 20


@dataclass(frozen=True)
class BenchResult:
    name: str
    n: int
    runs: int
    min_s: float
    median_s: float
    max_s: float
    blades: int

    def format_line(self) -> str:
        return (
            f"bench {self.name} n={self.n} runs={self.runs} "
            f"min={self.min_s:.6e} median={self.median_s:.6e} "
            f"max={self.max_s:.6e} blades={self.blades}"
        )


def _time_op(name: str, n: int, runs: int, op, blades: int) -> BenchResult:
    samples = []
    for _ in range(runs):
        start = time.perf_counter()
        op()
        samples.append(time.perf_counter() - start)
    return BenchResult(
        name=name,
        n=n,
        runs=runs,
        min_s=min(samples),
        median_s=statistics.median(samples),
        max_s=max(samples),
        blades=blades,
    )


def _nonzero(a) -> int:
    return int(np.count_nonzero(a.coeffs))


def run_benchmarks(gamma: MetricExtensor, seed: int = 0, runs: int = MIN_RUNS) -> list[BenchResult]:
    """Benchmark the five core operations at the metric's dimension."""
    runs = max(runs, MIN_RUNS)
    n = gamma.n
    rng = np.random.default_rng(seed)
    x = random_multivector(rng, n)
    y = random_multivector(rng, n)
    phi = random_multiform(rng, n)
    # warm the sign and lift caches so the timings measure steady state
    wedge(x, y)
    left_contract_mv(phi, x)
    extend(gamma, x)
    invert_extension_via_formula(gamma, phi)
    entries = [
        ("wedge", lambda: wedge(x, y), _nonzero(x) + _nonzero(y)),
        ("duality_contraction", lambda: left_contract_mv(phi, x), _nonzero(phi) + _nonzero(x)),
        ("extend", lambda: extend(gamma, x), _nonzero(x)),
        ("scalar_product", lambda: scalar_product_mv(gamma, x, y), _nonzero(x) + _nonzero(y)),
        (
            "inversion_formula",
            lambda: invert_extension_via_formula(gamma, phi),
            _nonzero(phi),
        ),
    ]
    return [_time_op(name, n, runs, op, blades) for name, op, blades in entries]


def format_benchmarks(results: list[BenchResult]) -> str:
    return "\n".join(r.format_line() for r in results)
