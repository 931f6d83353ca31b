"""Identity suite runner: determinism, coverage and failure detection."""

import numpy as np
import pytest

from extensor.duality import _caches, sign_cache
from extensor.identities import (
    IDENTITIES,
    format_report,
    identity_names,
    run_identity_suite,
    suite_passed,
)
from extensor.sampling import random_metric


def _pool(seed, n, count=3):
    rng = np.random.default_rng(seed)
    return [random_metric(rng, n) for _ in range(count)]


def test_every_identity_passes_small(rng):
    for n in (1, 2, 3):
        reports = run_identity_suite(n, _pool(n, n), trials=10, seed=99)
        assert suite_passed(reports), format_report(
            [r for r in reports if not r.passed]
        )


def test_report_covers_every_identity():
    reports = run_identity_suite(2, _pool(0, 2), trials=2, seed=0)
    assert [r.name for r in reports] == identity_names()
    assert len(reports) == len(IDENTITIES)


def test_report_line_format():
    reports = run_identity_suite(2, _pool(0, 2), trials=3, seed=0)
    line = reports[0].format_line()
    fields = line.split()
    assert fields[0] == reports[0].name
    assert fields[1] == "3"
    float(fields[2])  # max abs error parses
    float(fields[3])  # max rel error parses
    assert fields[4] in ("PASS", "FAIL")


def test_runner_is_deterministic():
    pool = _pool(7, 3)
    first = format_report(run_identity_suite(3, pool, trials=5, seed=21))
    second = format_report(run_identity_suite(3, pool, trials=5, seed=21))
    assert first == second
    changed = format_report(run_identity_suite(3, pool, trials=5, seed=22))
    assert changed != first


def test_requires_a_metric():
    with pytest.raises(ValueError):
        run_identity_suite(2, [], trials=1, seed=0)


def test_corrupted_sign_cache_is_detected():
    # flip one contraction sign row; the suite must notice and report FAIL
    n = 2
    try:
        cache = sign_cache(n)
        good = cache.left_row(1)
        bad = -good.copy()
        bad.flags.writeable = False
        cache._left[1] = bad
        reports = run_identity_suite(n, _pool(0, n), trials=5, seed=3)
        assert not suite_passed(reports)
        failed = {r.name for r in reports if not r.passed}
        assert "Fund4" in failed or "contrformvectors" in failed
    finally:
        _caches.pop(n, None)  # rebuild clean rows for later tests
