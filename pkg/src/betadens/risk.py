"""Integrated L^p distances and the Monte Carlo risk machinery.

The distance between a histogram and a piecewise-constant reference is
computed exactly by merging the two breakpoint sets and summing closed-form
pieces; everything else goes through panel quadrature split at all known
breakpoints.  Monte Carlo trials derive their seeds as master_seed XOR trial
index and are reduced in trial order, so reports are identical for any
worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, EmptyEstimate
from .estimators import (PiecewisePolyDensity, histogram_estimate,
                         kernel_estimate, projection_estimate)
from .basis import build_poly_basis
from .kernels import kernel_by_name, silverman_bandwidth
from .processes import ProcessSpec, Sample, generate
from .quadrature import integrate_adaptive
from .schedules import histogram_bins_bv

_MAX_QUAD_PANELS = 2048


@dataclass(frozen=True)
class ReferenceDensity:
    """A reference density the estimators are compared against."""

    kind: str
    mu: float | None = None
    sigma2: float | None = None
    gamma: float | None = None
    support: tuple[float, float] = (0.0, 1.0)
    breaks: tuple[float, ...] | None = None
    values: tuple[float, ...] | None = None

    def pdf(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if self.kind == "uniform01":
            return np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0)
        if self.kind == "two-level":
            inside = (x >= 0.0) & (x <= 1.0)
            mid = (x > 0.25) & (x < 0.75)
            return np.where(inside, np.where(mid, 1.5, 0.5), 0.0)
        if self.kind == "gaussian":
            sigma = math.sqrt(self.sigma2)
            z = (x - self.mu) / sigma
            return np.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))
        if self.kind == "equivalent-lsv":
            inside = (x > 0.0) & (x <= 1.0)
            out = np.zeros_like(x)
            out[inside] = (1.0 - self.gamma) * x[inside] ** (-self.gamma)
            return out
        if self.kind == "step":
            breaks = np.asarray(self.breaks)
            idx = np.searchsorted(breaks, x, side="left") - 1
            out = np.zeros_like(x)
            inside = (x > breaks[0]) & (x <= breaks[-1])
            out[inside] = np.asarray(self.values)[idx[inside]]
            return out
        raise DomainError(f"unknown reference kind {self.kind!r}")

    def step_representation(self):
        """(breaks, values) when the density is piecewise constant, else None."""
        if self.kind == "uniform01":
            return np.array([0.0, 1.0]), np.array([1.0])
        if self.kind == "two-level":
            return np.array([0.0, 0.25, 0.75, 1.0]), np.array([0.5, 1.5, 0.5])
        if self.kind == "step":
            return np.asarray(self.breaks), np.asarray(self.values)
        return None

    def breakpoints(self) -> np.ndarray:
        step = self.step_representation()
        if step is not None:
            return step[0]
        return np.array(self.support)


def uniform01() -> ReferenceDensity:
    return ReferenceDensity(kind="uniform01", support=(0.0, 1.0))


def two_level() -> ReferenceDensity:
    return ReferenceDensity(kind="two-level", support=(0.0, 1.0))


def gaussian(mu: float, sigma2: float) -> ReferenceDensity:
    if sigma2 <= 0.0:
        raise DomainError(f"sigma2 must be positive, got {sigma2}")
    sigma = math.sqrt(sigma2)
    # mass outside a six-sigma window is below 1e-8, the quadrature budget
    return ReferenceDensity(kind="gaussian", mu=mu, sigma2=sigma2,
                            support=(mu - 6.0 * sigma, mu + 6.0 * sigma))


def equivalent_lsv(gamma: float) -> ReferenceDensity:
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma}")
    return ReferenceDensity(kind="equivalent-lsv", gamma=gamma, support=(0.0, 1.0))


def step_density(breaks, values) -> ReferenceDensity:
    """Arbitrary piecewise-constant function on (breaks[0], breaks[-1]].

    Not required to integrate to one; used as a comparison target, e.g. an
    empirical mean histogram.
    """
    breaks = tuple(float(b) for b in breaks)
    values = tuple(float(v) for v in values)
    if len(breaks) != len(values) + 1:
        raise DomainError("need one more break than values")
    if any(b >= c for b, c in zip(breaks[:-1], breaks[1:])):
        raise DomainError("breaks must be strictly increasing")
    if not all(math.isfinite(v) for v in values):
        raise DomainError("step values must be finite")
    return ReferenceDensity(kind="step", support=(breaks[0], breaks[-1]),
                            breaks=breaks, values=values)


@dataclass(frozen=True)
class RiskReport:
    """Aggregate of one Monte Carlo risk experiment."""

    n: int
    trials: int
    p: float
    mean_risk: float
    std_error: float
    per_trial: tuple[float, ...]


def _histogram_step(estimate: PiecewisePolyDensity):
    breaks = estimate.breakpoints()
    return breaks, estimate.bin_values()


def _step_value(breaks: np.ndarray, values: np.ndarray, x: float) -> float:
    # half-open pieces (breaks[i], breaks[i+1]]; outside the range -> 0
    if x <= breaks[0] or x > breaks[-1]:
        return 0.0
    i = int(np.searchsorted(breaks, x, side="left")) - 1
    return float(values[i])


def lp_distance(estimate, reference: ReferenceDensity, p: float = 1.0,
                domain: tuple[float, float] | None = None) -> float:
    """integral over `domain` of |f_n - f|^p.

    Exact (breakpoint merge) when both sides are step functions; adaptive
    Gauss-Legendre split at all known breakpoints otherwise.
    """
    if p < 1.0:
        raise DomainError(f"risk exponent must be >= 1, got {p}")
    if domain is None:
        domain = reference.support
    lo, hi = float(domain[0]), float(domain[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
        raise DomainError(f"domain must be a finite nonempty interval, got {domain}")

    step = reference.step_representation()
    if isinstance(estimate, PiecewisePolyDensity) and estimate.degree == 0 and step is not None:
        eb, ev = _histogram_step(estimate)
        rb, rv = step
        cuts = np.unique(np.concatenate([
            [lo, hi],
            eb[(eb > lo) & (eb < hi)],
            rb[(rb > lo) & (rb < hi)],
        ]))
        total = 0.0
        for a, b in zip(cuts[:-1], cuts[1:]):
            mid = 0.5 * (a + b)
            fe = _step_value(eb, ev, mid)
            fr = _step_value(rb, rv, mid)
            total += abs(fe - fr) ** p * (b - a)
        return total

    eb = estimate.breakpoints()
    if len(eb) > _MAX_QUAD_PANELS:
        eb = np.linspace(eb[0], eb[-1], _MAX_QUAD_PANELS + 1)
    rb = reference.breakpoints()
    edges = np.unique(np.concatenate([
        [lo, hi], eb[(eb > lo) & (eb < hi)], rb[(rb > lo) & (rb < hi)],
    ]))
    integrand = lambda x: np.abs(estimate.evaluate(x) - reference.pdf(x)) ** p
    return integrate_adaptive(integrand, edges, tol=1e-8)


@dataclass(frozen=True)
class HistogramSpec:
    """Histogram (or higher-degree projection) estimator configuration.

    With m unset, the bin count follows the BV schedule floor(C n^(1/3)).
    """

    m: int | None = None
    bins_constant: float = 1.0
    degree: int = 0


@dataclass(frozen=True)
class KernelEstimatorSpec:
    """Kernel estimator configuration; bandwidth None means the rule of thumb."""

    kernel_name: str = "epanechnikov"
    bandwidth: float | None = None


EstimatorSpec = HistogramSpec | KernelEstimatorSpec


def build_estimate(sample: Sample, config: EstimatorSpec):
    n = len(sample)
    if isinstance(config, HistogramSpec):
        m = config.m if config.m is not None else histogram_bins_bv(n, config.bins_constant)
        if config.degree == 0:
            return histogram_estimate(sample, m)
        return projection_estimate(sample, m, build_poly_basis(config.degree))
    if isinstance(config, KernelEstimatorSpec):
        kernel = kernel_by_name(config.kernel_name)
        h = config.bandwidth if config.bandwidth is not None else silverman_bandwidth(sample)
        return kernel_estimate(sample, kernel, h)
    raise DomainError(f"unknown estimator config {config!r}")


def _trial_risk(task) -> float:
    trial, spec, est_cfg, reference, p = task
    try:
        sample = generate(spec)
        estimate = build_estimate(sample, est_cfg)
        return lp_distance(estimate, reference, p)
    except Exception as exc:
        raise RuntimeError(f"Monte Carlo trial {trial} failed: {exc}") from exc


def monte_carlo_risk(process: ProcessSpec, estimator: EstimatorSpec,
                     reference: ReferenceDensity, n: int | None = None,
                     trials: int = 300, p: float = 1.0, master_seed: int = 1,
                     workers: int = 1) -> RiskReport:
    """Mean integrated |f_n - f|^p over seeded independent trials.

    Trial t runs on seed master_seed XOR t; per-trial values are reduced in
    trial order, so the report does not depend on `workers`.
    """
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    if n is None:
        n = process.n
    tasks = [(t, replace(process, n=n, seed=master_seed ^ t), estimator, reference, p)
             for t in range(1, trials + 1)]
    if workers > 1 and trials > 1:
        chunk = max(1, trials // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_trial_risk, tasks, chunksize=chunk))
    else:
        values = [_trial_risk(task) for task in tasks]
    arr = np.asarray(values)
    mean = float(arr.mean())
    se = float(arr.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return RiskReport(n=n, trials=trials, p=p, mean_risk=mean, std_error=se,
                      per_trial=tuple(values))


def envelope_check(estimate: PiecewisePolyDensity, gamma: float,
                   skip_bins: int = 1) -> tuple[float, float]:
    """Extremes of f_n / f_gamma over occupied bins past the first skip_bins.

    Reports only; whether the ratios are consistent with a bounded envelope
    is the caller's judgment.
    """
    if not isinstance(estimate, PiecewisePolyDensity) or estimate.degree != 0:
        raise DomainError("envelope check expects a histogram estimate")
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma}")
    m = estimate.m
    if not 0 <= skip_bins < m:
        raise DomainError(f"skip_bins must lie in [0, m), got {skip_bins}")
    heights = estimate.bin_values()[skip_bins:]
    mids = (np.arange(skip_bins, m) + 0.5) / m
    occupied = heights > 0.0
    if not np.any(occupied):
        raise EmptyEstimate("all considered bins are empty")
    ratios = heights[occupied] / ((1.0 - gamma) * mids[occupied] ** (-gamma))
    return float(ratios.min()), float(ratios.max())


def loglog_slope(points) -> float:
    """Least-squares slope of log(risk) against log(n)."""
    pts = [(float(n), float(r)) for n, r in points]
    if len(pts) < 3:
        raise DomainError(f"need at least 3 points, got {len(pts)}")
    if any(n <= 0.0 or r <= 0.0 for n, r in pts):
        raise DomainError("log-log regression needs positive coordinates")
    x = np.log([n for n, _ in pts])
    y = np.log([r for _, r in pts])
    x_cent = x - x.mean()
    return float(np.dot(x_cent, y - y.mean()) / np.dot(x_cent, x_cent))
