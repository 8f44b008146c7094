"""Flat key=value experiment configurations.

One experiment per file; lines are `key = value`, blank lines and `#`
comments are ignored.  Unknown keys are rejected, as are experiments with
missing required keys, so a config names everything the run depends on.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

from .errors import ConfigError

EXPERIMENTS = (
    "kernel-gaussian-figure",
    "histogram-two-level-figure",
    "risk-table-sweep",
    "risk-slope-plot",
    "lsv-histogram-figure",
    "coefficient-report",
)

_INT_KEYS = {"n", "trials", "master_seed", "m", "degree", "threads",
             "grid_points", "k_max", "quad_nodes", "burn_in"}
_FLOAT_KEYS = {"p", "gamma", "mu", "sigma2", "bins_constant"}
_BOOL_KEYS = {"loglog"}
_STR_KEYS = {"experiment", "kernel", "bandwidth", "out_dir", "n_grid"}
_ALL_KEYS = _INT_KEYS | _FLOAT_KEYS | _BOOL_KEYS | _STR_KEYS

_REQUIRED = {
    "kernel-gaussian-figure": {"n", "mu", "sigma2"},
    "histogram-two-level-figure": {"n"},
    "risk-table-sweep": {"n_grid", "trials"},
    "risk-slope-plot": {"n_grid", "trials"},
    "lsv-histogram-figure": {"n", "gamma"},
    "coefficient-report": {"k_max"},
}

_OPTIONAL = {
    "kernel-gaussian-figure": {"kernel", "bandwidth", "master_seed", "grid_points",
                               "out_dir", "burn_in"},
    "histogram-two-level-figure": {"m", "bins_constant", "master_seed", "out_dir",
                                   "burn_in"},
    "risk-table-sweep": {"p", "bins_constant", "master_seed", "threads", "out_dir",
                         "burn_in"},
    "risk-slope-plot": {"p", "bins_constant", "master_seed", "threads", "out_dir",
                        "loglog", "burn_in"},
    "lsv-histogram-figure": {"m", "master_seed", "out_dir", "burn_in"},
    "coefficient-report": {"quad_nodes", "out_dir"},
}


@dataclass
class ExperimentConfig:
    experiment: str
    n: int | None = None
    n_grid: tuple[int, ...] | None = None
    trials: int = 300
    master_seed: int = 1
    p: float = 1.0
    gamma: float | None = None
    mu: float | None = None
    sigma2: float | None = None
    kernel: str = "epanechnikov"
    bandwidth: str = "silverman"       # "silverman" or a float literal
    m: int | None = None
    bins_constant: float = 1.0
    degree: int = 0
    threads: int = 1
    grid_points: int = 512
    k_max: int = 20
    quad_nodes: int = 64
    burn_in: int = 1000
    loglog: bool = False
    out_dir: str = "out"


def parse_n_grid(text: str) -> tuple[int, ...]:
    """Either 'start:stop:step' (inclusive stop) or a comma list."""
    text = text.strip()
    try:
        if ":" in text:
            start, stop, step = (int(part) for part in text.split(":"))
            if step <= 0 or stop < start:
                raise ValueError
            return tuple(range(start, stop + 1, step))
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse n_grid value {text!r}") from None


def _convert(key: str, raw: str):
    try:
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _BOOL_KEYS:
            if raw.lower() in ("true", "1", "yes"):
                return True
            if raw.lower() in ("false", "0", "no"):
                return False
            raise ValueError
        return raw
    except ValueError:
        raise ConfigError(f"bad value {raw!r} for key {key!r}") from None


def parse_config(text: str) -> ExperimentConfig:
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected key = value, got {line!r}")
        key, _, raw = stripped.partition("=")
        key, raw = key.strip(), raw.strip()
        if key not in _ALL_KEYS:
            raise ConfigError(f"unknown key {key!r}")
        if key in pairs:
            raise ConfigError(f"duplicate key {key!r}")
        pairs[key] = raw

    if "experiment" not in pairs:
        raise ConfigError("missing required key 'experiment'")
    experiment = pairs["experiment"]
    if experiment not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {experiment!r}; have {EXPERIMENTS}")

    allowed = {"experiment"} | _REQUIRED[experiment] | _OPTIONAL[experiment]
    for key in pairs:
        if key not in allowed:
            raise ConfigError(f"key {key!r} does not belong to experiment {experiment!r}")
    missing = _REQUIRED[experiment] - set(pairs)
    if missing:
        raise ConfigError(f"experiment {experiment!r} is missing keys {sorted(missing)}")

    config = ExperimentConfig(experiment=experiment)
    for key, raw in pairs.items():
        if key == "experiment":
            continue
        if key == "n_grid":
            config.n_grid = parse_n_grid(raw)
        else:
            setattr(config, key, _convert(key, raw))
    _validate(config)
    return config


def _validate(config: ExperimentConfig) -> None:
    if config.bandwidth != "silverman":
        try:
            float(config.bandwidth)
        except ValueError:
            raise ConfigError(
                f"bandwidth must be 'silverman' or a number, got {config.bandwidth!r}"
            ) from None
    if config.gamma is not None and not 0.0 < config.gamma < 1.0:
        raise ConfigError(f"gamma must lie in (0, 1), got {config.gamma}")
    if config.trials < 1:
        raise ConfigError("trials must be >= 1")
    if config.threads < 1:
        raise ConfigError("threads must be >= 1")
    if not 0 <= config.master_seed < 2**64:
        raise ConfigError("master_seed must be an unsigned 64-bit integer")


def load_config(path) -> ExperimentConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def serialize_config(config: ExperimentConfig) -> str:
    """Canonical, re-parseable text form (only keys that matter are kept)."""
    keep = {"experiment"} | _REQUIRED[config.experiment] | _OPTIONAL[config.experiment]
    lines = []
    for f in fields(config):
        if f.name not in keep:
            continue
        value = getattr(config, f.name)
        if value is None:
            continue
        if f.name == "n_grid":
            value = ",".join(str(v) for v in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"
