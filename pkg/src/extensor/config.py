"""Session configuration: line-oriented `key = value` files.

Keys: dim, metric (row-major nested bracket lists), seed, trials, tolerance.
`#` starts a comment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import MAX_DIM
from .metric import MetricExtensor, MetricTensor

_METRIC_SYMMETRY_TOL = 1e-12


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)


@dataclass(frozen=True)
class SessionConfig:
    dim: int
    metric: np.ndarray
    seed: int = 0
    trials: int = 200
    tolerance: float = 1e-9

    def extensor(self) -> MetricExtensor:
        return MetricExtensor(self.dim, self.metric)

    def tensor(self) -> MetricTensor:
        return MetricTensor(self.dim, self.metric)


def _parse_scalar(key: str, raw: str, line_no: int):
    try:
        if key == "dim":
            return int(raw)
        if key == "seed":
            value = int(raw)
            if not 0 <= value < 2**64:
                raise ValueError
            return value
        if key == "trials":
            return int(raw)
        if key == "tolerance":
            return float(raw)
    except ValueError:
        raise ConfigError(f"invalid value for {key}: {raw!r}", line=line_no) from None
    raise ConfigError(f"unknown key {key!r}", line=line_no)


def parse_config(text: str) -> SessionConfig:
    values: dict[str, object] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected `key = value`", line=line_no, column=1)
        key, _, raw = line.partition("=")
        key = key.strip()
        raw = raw.strip()
        if key == "metric":
            try:
                rows = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ConfigError(
                    f"bad metric literal: {exc.msg}", line=line_no, column=exc.colno
                ) from None
            values[key] = rows
        else:
            values[key] = _parse_scalar(key, raw, line_no)
    if "dim" not in values:
        raise ConfigError("missing required key `dim`")
    if "metric" not in values:
        raise ConfigError("missing required key `metric`")
    dim = values["dim"]
    if not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise ConfigError(f"dim must be an integer in 1..{MAX_DIM}, got {dim!r}")
    metric = np.asarray(values["metric"], dtype=float)
    if metric.shape != (dim, dim):
        raise ConfigError(
            f"metric must be a {dim}x{dim} row-major matrix, got shape {metric.shape}"
        )
    asym = float(np.max(np.abs(metric - metric.T)))
    if asym > _METRIC_SYMMETRY_TOL:
        raise ConfigError(f"metric is not symmetric (max asymmetry {asym:.3e})")
    metric = 0.5 * (metric + metric.T)
    det = float(np.linalg.det(metric))
    if abs(det) <= 1e-10:
        raise ConfigError(f"metric is degenerate (|det| = {abs(det):.3e})")
    trials = values.get("trials", 200)
    if not isinstance(trials, int) or trials < 1:
        raise ConfigError(f"trials must be a positive integer, got {trials!r}")
    tolerance = values.get("tolerance", 1e-9)
    if not tolerance > 0:
        raise ConfigError(f"tolerance must be positive, got {tolerance!r}")
    metric.flags.writeable = False
    return SessionConfig(
        dim=dim,
        metric=metric,
        seed=values.get("seed", 0),
        trials=trials,
        tolerance=float(tolerance),
    )
