"""Session config parsing and validation."""

import numpy as np
import pytest

from extensor.config import ConfigError, parse_config

GOOD = """
# sample session
dim = 2
metric = [[2, 0], [0, 3]]
seed = 5
trials = 50
tolerance = 1e-8
"""


def test_parse_good_config():
    cfg = parse_config(GOOD)
    assert cfg.dim == 2
    assert np.array_equal(cfg.metric, np.diag([2.0, 3.0]))
    assert cfg.seed == 5
    assert cfg.trials == 50
    assert cfg.tolerance == 1e-8
    assert cfg.extensor().n == 2


def test_defaults():
    cfg = parse_config("dim = 2\nmetric = [[1, 0], [0, 1]]")
    assert cfg.seed == 0
    assert cfg.trials == 200
    assert cfg.tolerance == 1e-9


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("metric = [[1,0],[0,1]]", "dim"),
        ("dim = 2", "metric"),
        ("dim = 0\nmetric = [[1]]", "dim must be"),
        ("dim = 2\nmetric = [[1, 0], [0, 1]\n", "bad metric literal"),
        ("dim = 2\nmetric = [[1, 0, 0], [0, 1, 0]]", "2x2"),
        ("dim = 2\nmetric = [[1, 0.5], [0, 1]]", "symmetric"),
        ("dim = 2\nmetric = [[1, 1], [1, 1]]", "degenerate"),
        ("dim = 2\nmetric = [[1,0],[0,1]]\ntrials = 0", "trials"),
        ("dim = 2\nmetric = [[1,0],[0,1]]\ntolerance = -1", "tolerance"),
        ("dim = 2\nmetric = [[1,0],[0,1]]\nseed = -1", "seed"),
        ("dim = two\nmetric = [[1,0],[0,1]]", "invalid value"),
        ("bogus = 1\ndim = 2\nmetric = [[1,0],[0,1]]", "unknown key"),
        ("just some words", "key = value"),
    ],
)
def test_config_errors(text, fragment):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert fragment in str(info.value)


def test_error_reports_line_numbers():
    with pytest.raises(ConfigError) as info:
        parse_config("dim = 2\nmetric = [[1, 0], [0, 1]\n")
    assert info.value.line == 2


def test_metric_is_read_only():
    cfg = parse_config(GOOD)
    with pytest.raises(ValueError):
        cfg.metric[0, 0] = 9.0
