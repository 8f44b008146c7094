"""Density estimators: kernel smoothing and piecewise-polynomial projection.

Both estimators are immutable value objects; evaluation is vectorized and a
shared `evaluate` helper dispatches on the variant.  Histograms are the
degree-0 special case of the projection estimator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import PolyBasis, build_poly_basis
from .errors import DomainError
from .kernels import KernelSpec
from .processes import Sample


@dataclass(frozen=True, eq=False)
class KernelDensity:
    """f_n(x) = (1/(n h)) sum_k K((x - Y_k) / h) over a sorted copy of the sample."""

    sorted_values: np.ndarray
    kernel: KernelSpec
    bandwidth: float

    def __post_init__(self):
        v = np.sort(np.asarray(self.sorted_values, dtype=float))
        v.flags.writeable = False
        object.__setattr__(self, "sorted_values", v)

    @property
    def n(self) -> int:
        return len(self.sorted_values)

    @property
    def support_hint(self) -> tuple[float, float]:
        r = self.bandwidth * self.kernel.support_radius
        return float(self.sorted_values[0] - r), float(self.sorted_values[-1] + r)

    def breakpoints(self) -> np.ndarray:
        """Kink locations of the estimate (edges of each shifted kernel support)."""
        r = self.bandwidth * self.kernel.support_radius
        pts = np.concatenate([self.sorted_values - r, self.sorted_values + r])
        return np.unique(pts)

    def evaluate(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        v = self.sorted_values
        h = self.bandwidth
        r = h * self.kernel.support_radius
        lo = np.searchsorted(v, x - r, side="left")
        hi = np.searchsorted(v, x + r, side="right")
        out = np.zeros_like(x)
        for i in range(len(x)):
            if hi[i] > lo[i]:
                out[i] = self.kernel.eval((x[i] - v[lo[i]:hi[i]]) / h).sum()
        return out / (self.n * h)


@dataclass(frozen=True, eq=False)
class PiecewisePolyDensity:
    """Projection estimate sum_{i,j} c_{i,j} sqrt(m) Q_i(m x - (j-1)) on (0, 1].

    coeffs has shape (degree+1, m); bin j only ever uses column j-1, and any
    x outside (0, 1] evaluates to zero.  Bins are the half-open intervals
    ((j-1)/m, j/m].
    """

    m: int
    coeffs: np.ndarray
    basis: PolyBasis

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (self.basis.degree + 1, self.m):
            raise DomainError(f"coefficients must have shape (r+1, m), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise DomainError("projection coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def support_hint(self) -> tuple[float, float]:
        return (0.0, 1.0)

    def breakpoints(self) -> np.ndarray:
        return np.arange(self.m + 1) / self.m

    def bin_values(self) -> np.ndarray:
        """Histogram heights per bin (degree 0 only)."""
        if self.degree != 0:
            raise DomainError("bin_values is defined for histograms (degree 0)")
        return self.coeffs[0] * np.sqrt(self.m)

    def evaluate(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros_like(x)
        inside = (x > 0.0) & (x <= 1.0)
        if not np.any(inside):
            return out
        xi = x[inside]
        j = np.ceil(xi * self.m).astype(int)      # 1-based bin, half-open right
        t = self.m * xi - (j - 1)
        q = self.basis.eval_all(t)                # (r+1, k)
        c = self.coeffs[:, j - 1]                 # (r+1, k)
        out[inside] = np.sqrt(self.m) * np.sum(c * q, axis=0)
        return out


DensityEstimate = KernelDensity | PiecewisePolyDensity


def kernel_estimate(sample: Sample, kernel: KernelSpec, h: float) -> KernelDensity:
    if h <= 0.0:
        raise DomainError(f"bandwidth must be positive, got {h}")
    if len(sample) == 0:
        raise DomainError("cannot estimate from an empty sample")
    return KernelDensity(sorted_values=sample.values, kernel=kernel, bandwidth=h)


def projection_estimate(sample: Sample, m: int, basis: PolyBasis) -> PiecewisePolyDensity:
    """Empirical projection coefficients c_{i,j} = (1/n) sum_k phi_{i,j}(Y_k).

    Sample values outside (0, 1] contribute zero, matching the zero extension
    of the base polynomials.
    """
    if m < 1:
        raise DomainError(f"bin count must be >= 1, got {m}")
    values = sample.values
    n = len(values)
    inside = (values > 0.0) & (values <= 1.0)
    xi = values[inside]
    coeffs = np.zeros((basis.degree + 1, m))
    if len(xi):
        j = np.ceil(xi * m).astype(int)
        t = m * xi - (j - 1)
        q = basis.eval_all(t)
        for i in range(basis.degree + 1):
            coeffs[i] = np.bincount(j - 1, weights=q[i], minlength=m)
        coeffs *= np.sqrt(m) / n
    return PiecewisePolyDensity(m=m, coeffs=coeffs, basis=basis)


def histogram_estimate(sample: Sample, m: int) -> PiecewisePolyDensity:
    """Regular histogram on ((j-1)/m, j/m], the degree-0 projection."""
    return projection_estimate(sample, m, build_poly_basis(0))


def evaluate(estimate: DensityEstimate, x):
    """Pointwise value of an estimate; scalar in, scalar out."""
    out = estimate.evaluate(x)
    return float(out[0]) if np.isscalar(x) else out


def estimate_mass(estimate: DensityEstimate) -> float:
    """Integral of the estimate over its support.

    Exact for both variants: histogram/projection mass is a finite sum of
    exact bin integrals, and a kernel estimate is polynomial between
    consecutive kinks, where moderate Gauss-Legendre panels are exact.
    """
    if isinstance(estimate, PiecewisePolyDensity):
        # only the constant component carries mass: int_0^1 Q_i = 0 for i >= 2
        return float(estimate.coeffs[0].sum() / np.sqrt(estimate.m))
    edges = estimate.breakpoints()
    if len(edges) > 4096:
        lo, hi = estimate.support_hint
        edges = np.linspace(lo, hi, 4097)
    from .quadrature import panel_nodes

    x, w = panel_nodes(edges, 16)
    return float(np.dot(w, estimate.evaluate(x)))


def projection_constants(basis: PolyBasis, p: float) -> tuple[float, float]:
    """Variance/correction constants of the projection risk bounds.

    Computed from the chosen basis normalization:
    first constant  sum_i ||R_i||_inf^{3p/2} ||dR_i||^{p/2},
    second constant sum_i ||R_i||_inf^{p+1}  ||dR_i||^{p-1}.
    """
    sup, tv = basis.sup_norms, basis.tv_norms
    c1 = float(np.sum(sup ** (1.5 * p) * tv ** (0.5 * p)))
    c2 = float(np.sum(sup ** (p + 1.0) * tv ** (p - 1.0)))
    return c1, c2
