"""Generators for the dependent processes studied by this lab.

All processes are strictly stationary on [0, 1] (or transforms thereof):

* the dyadic AR(1) chain X_{k+1} = (X_k + eps_{k+1}) / 2 with fair-coin
  innovations and uniform initial state,
* its Gaussian and piecewise two-level quantile transforms,
* trajectories of the intermittent interval map with parameter gamma.

Randomness comes from a counter-based generator (Philox) keyed by the seed,
so identical specs reproduce bit-identical samples on any platform and
Monte Carlo trials can derive independent streams as seed XOR trial index.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError
from .normal import norm_ppf

DEFAULT_BURN_IN = 1000


class ProcessKind(enum.Enum):
    AR1_BINARY = "ar1-binary"
    AR1_GAUSSIAN = "ar1-gaussian"
    AR1_PIECEWISE = "ar1-piecewise"
    LSV_TRAJECTORY = "lsv"


@dataclass(frozen=True)
class ProcessSpec:
    """Declarative description of a data-generating process."""

    kind: ProcessKind
    n: int
    seed: int = 0
    burn_in: int = DEFAULT_BURN_IN
    gamma: float | None = None
    mu: float | None = None
    sigma2: float | None = None

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"sample length must be >= 1, got {self.n}")
        if self.burn_in < 0:
            raise DomainError(f"burn-in must be >= 0, got {self.burn_in}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if (self.kind is ProcessKind.LSV_TRAJECTORY) != (self.gamma is not None):
            raise DomainError("gamma is required for lsv and forbidden otherwise")
        if self.gamma is not None and not 0.0 < self.gamma < 1.0:
            raise DomainError(f"gamma must lie in (0, 1), got {self.gamma}")
        gaussian = self.kind is ProcessKind.AR1_GAUSSIAN
        if gaussian != (self.mu is not None and self.sigma2 is not None):
            raise DomainError("mu/sigma2 are required exactly for the gaussian transform")
        if self.sigma2 is not None and self.sigma2 <= 0.0:
            raise DomainError(f"sigma2 must be positive, got {self.sigma2}")


@dataclass(frozen=True, eq=False)
class Sample:
    """Immutable realization (Y_1, ..., Y_n) of a process."""

    values: np.ndarray
    spec: ProcessSpec

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        if len(values) != self.spec.n:
            raise DomainError(
                f"sample has {len(values)} values but spec.n = {self.spec.n}")
        if self.spec.kind in (ProcessKind.AR1_BINARY, ProcessKind.LSV_TRAJECTORY):
            if len(values) and (values.min() < 0.0 or values.max() > 1.0):
                raise DomainError(f"{self.spec.kind.value} samples live in [0, 1]")

    def __len__(self) -> int:
        return len(self.values)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def ar1_step(x: float, eps: int) -> float:
    """One exact step of the dyadic recursion."""
    return 0.5 * (x + eps)


def ar1_binary_chain(n: int, burn_in: int = DEFAULT_BURN_IN, seed: int = 0) -> Sample:
    """Sample the dyadic AR(1) chain after discarding `burn_in` steps.

    The recursion X_{k+1} = (X_k + eps_{k+1})/2 prepends each innovation bit
    to the binary expansion of the state, so the k-th iterate is the 64-bit
    sliding window over the innovation stream (seeded with the bits of the
    uniform initial state).  The chain is evaluated in 64-bit fixed point:
    each value is within 2^-64 of the exact real recursion, and the whole
    trajectory is produced by vectorized shifts instead of a scalar loop.
    """
    spec = ProcessSpec(kind=ProcessKind.AR1_BINARY, n=n, seed=seed, burn_in=burn_in)
    rng = _rng(seed)
    x0 = rng.random()
    total = burn_in + n
    bits = rng.integers(0, 2, size=total, dtype=np.uint64)

    reg = np.zeros(total, dtype=np.uint64)
    for s in range(min(64, total)):
        reg[s:] |= bits[: total - s] << np.uint64(63 - s)
    # bits of X_0 fill the part of the window not yet covered by innovations
    reg0 = np.uint64(int(x0 * 2.0**64))
    head = min(64, total)
    shifts = np.arange(1, head + 1, dtype=np.uint64)
    reg[:head] |= reg0 >> shifts

    values = reg[burn_in:].astype(np.float64) * 2.0**-64
    return Sample(values=values, spec=spec)


def gaussian_quantile_transform(sample: Sample, mu: float, sigma2: float) -> Sample:
    """Map a uniform-marginal sample through the N(mu, sigma2) quantile."""
    if sigma2 <= 0.0:
        raise DomainError(f"sigma2 must be positive, got {sigma2}")
    values = sample.values
    if np.any(values <= 0.0) or np.any(values >= 1.0):
        raise DomainError("gaussian transform needs values strictly inside (0, 1)")
    sigma = math.sqrt(sigma2)
    out = np.fromiter((mu + sigma * norm_ppf(u) for u in values),
                      dtype=float, count=len(values))
    spec = replace(sample.spec, kind=ProcessKind.AR1_GAUSSIAN, mu=mu, sigma2=sigma2)
    return Sample(values=out, spec=spec)


def piecewise_quantile(u):
    """Closed-form quantile of the two-level density on [0, 1].

    The density is 1/2 on [0, 1/4] and (3/4, 1], 3/2 on (1/4, 3/4]; its CDF
    inverts branch by branch.
    """
    u = np.asarray(u, dtype=float)
    return np.where(u <= 0.125, 2.0 * u,
                    np.where(u <= 0.875, 0.25 + (2.0 / 3.0) * (u - 0.125),
                             0.75 + 2.0 * (u - 0.875)))


def piecewise_quantile_transform(sample: Sample) -> Sample:
    values = sample.values
    if np.any(values < 0.0) or np.any(values > 1.0):
        raise DomainError("piecewise transform needs values in [0, 1]")
    out = piecewise_quantile(values)
    spec = replace(sample.spec, kind=ProcessKind.AR1_PIECEWISE)
    return Sample(values=out, spec=spec)


def lsv_step(x: float, gamma: float) -> float:
    """One iteration of the intermittent map.

    Left branch x(1 + 2^gamma x^gamma) on [0, 1/2), right branch 2x - 1 on
    [1/2, 1].  The left branch may exceed 1 by a rounding ulp near 1/2; the
    result is clamped only against that.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"map argument must lie in [0, 1], got {x!r}")
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma!r}")
    if x < 0.5:
        t = x * (1.0 + 2.0**gamma * x**gamma)
    else:
        t = 2.0 * x - 1.0
    if t > 1.0:
        if t > 1.0 + 4.0 * np.finfo(float).eps:
            raise DomainError(f"map image {t!r} exceeds [0, 1] beyond rounding")
        t = 1.0
    return t


def lsv_trajectory(n: int, gamma: float, burn_in: int = DEFAULT_BURN_IN,
                   seed: int = 0) -> Sample:
    """Iterate the intermittent map from a uniform start.

    Returns the n iterates following the burn-in, i.e. (T^{b+1}(y), ...,
    T^{b+n}(y)).  The loop inlines the same branch arithmetic as lsv_step;
    iterates escape the neutral fixed point in finitely many steps, so plain
    double precision is used throughout.
    """
    spec = ProcessSpec(kind=ProcessKind.LSV_TRAJECTORY, n=n, seed=seed,
                       burn_in=burn_in, gamma=gamma)
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma!r}")
    rng = _rng(seed)
    x = rng.random()
    scale = 2.0**gamma
    out = np.empty(n)
    for k in range(burn_in):
        x = x * (1.0 + scale * x**gamma) if x < 0.5 else 2.0 * x - 1.0
        if x > 1.0:
            x = 1.0
    for k in range(n):
        x = x * (1.0 + scale * x**gamma) if x < 0.5 else 2.0 * x - 1.0
        if x > 1.0:
            x = 1.0
        out[k] = x
    return Sample(values=out, spec=spec)


def generate(spec: ProcessSpec) -> Sample:
    """Realize any ProcessSpec."""
    if spec.kind is ProcessKind.AR1_BINARY:
        return ar1_binary_chain(spec.n, spec.burn_in, spec.seed)
    if spec.kind is ProcessKind.AR1_GAUSSIAN:
        base = ar1_binary_chain(spec.n, spec.burn_in, spec.seed)
        return gaussian_quantile_transform(base, spec.mu, spec.sigma2)
    if spec.kind is ProcessKind.AR1_PIECEWISE:
        base = ar1_binary_chain(spec.n, spec.burn_in, spec.seed)
        return piecewise_quantile_transform(base)
    if spec.kind is ProcessKind.LSV_TRAJECTORY:
        return lsv_trajectory(spec.n, spec.gamma, spec.burn_in, spec.seed)
    raise DomainError(f"unknown process kind {spec.kind!r}")
