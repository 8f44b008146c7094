"""Experiment runner: configs in, CSV tables and SVG figures out."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .config import ExperimentConfig
from .csvio import emit_csv
from .depcoeff import beta1_estimate, beta2_pair_lower_bound
from .errors import ConfigError
from .estimators import histogram_estimate, kernel_estimate
from .kernels import kernel_by_name, silverman_bandwidth
from .processes import ProcessKind, ProcessSpec, generate
from .risk import (HistogramSpec, gaussian, loglog_slope, monte_carlo_risk,
                   two_level)
from .schedules import (equivalent_density, histogram_bins_bv, histogram_bins_lsv)
from .svg import SvgFigure

_SEED_MIX = 0x9E3779B97F4A7C15  # per-row seed separation for n-sweeps


def _row_seed(master_seed: int, n: int) -> int:
    return (master_seed ^ (n * _SEED_MIX)) % 2**64


def run_experiment(config: ExperimentConfig, out_dir: str | Path | None = None) -> list[Path]:
    """Execute one experiment; returns the files written."""
    out = Path(out_dir if out_dir is not None else config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    runner = _RUNNERS.get(config.experiment)
    if runner is None:
        raise ConfigError(f"unknown experiment {config.experiment!r}")
    return runner(config, out)


def _bandwidth_for(config: ExperimentConfig, sample) -> float:
    if config.bandwidth == "silverman":
        return silverman_bandwidth(sample)
    return float(config.bandwidth)


def _kernel_gaussian_figure(config: ExperimentConfig, out: Path) -> list[Path]:
    spec = ProcessSpec(kind=ProcessKind.AR1_GAUSSIAN, n=config.n,
                       seed=config.master_seed, burn_in=config.burn_in,
                       mu=config.mu, sigma2=config.sigma2)
    sample = generate(spec)
    kernel = kernel_by_name(config.kernel)
    h = _bandwidth_for(config, sample)
    estimate = kernel_estimate(sample, kernel, h)
    ref = gaussian(config.mu, config.sigma2)
    sigma = math.sqrt(config.sigma2)
    grid = np.linspace(config.mu - 4.0 * sigma, config.mu + 4.0 * sigma,
                       config.grid_points)
    est_vals = estimate.evaluate(grid)
    true_vals = ref.pdf(grid)

    stem = f"kernel_gaussian_n{config.n}"
    csv_path = emit_csv(out / f"{stem}.csv",
                        ["x", "estimate", "true_density"],
                        [(float(x), float(e), float(t))
                         for x, e, t in zip(grid, est_vals, true_vals)])
    fig = SvgFigure(title=f"{kernel.name} kernel estimate, n={config.n}, h={h:.4g}",
                    xlabel="x", ylabel="density")
    top = 1.1 * max(est_vals.max(), true_vals.max())
    fig.set_limits((grid[0], grid[-1]), (0.0, top))
    fig.add_curve(grid, est_vals, stroke="#1f77b4", width=1.6)
    fig.add_curve(grid, true_vals, stroke="#cc0000", width=1.4)
    svg_path = fig.save(out / f"{stem}.svg")
    return [csv_path, svg_path]


def _histogram_two_level_figure(config: ExperimentConfig, out: Path) -> list[Path]:
    spec = ProcessSpec(kind=ProcessKind.AR1_PIECEWISE, n=config.n,
                       seed=config.master_seed, burn_in=config.burn_in)
    sample = generate(spec)
    m = config.m if config.m is not None else histogram_bins_bv(config.n, config.bins_constant)
    estimate = histogram_estimate(sample, m)
    heights = estimate.bin_values()
    edges = estimate.breakpoints()
    ref = two_level()
    mids = (edges[:-1] + edges[1:]) / 2.0

    stem = f"histogram_two_level_n{config.n}"
    csv_path = emit_csv(out / f"{stem}.csv",
                        ["bin", "left", "right", "height", "true_density_at_mid"],
                        [(j + 1, float(edges[j]), float(edges[j + 1]),
                          float(heights[j]), float(ref.pdf(mids[j])[0]))
                         for j in range(m)])
    fig = SvgFigure(title=f"histogram, two-level density, n={config.n}, m={m}",
                    xlabel="x", ylabel="density")
    fig.set_limits((0.0, 1.0), (0.0, 1.1 * max(float(heights.max()), 1.5)))
    fig.add_bars(edges, heights)
    overlay = np.array([0.0, 0.25, 0.25, 0.75, 0.75, 1.0])
    fig.add_curve(overlay, np.array([0.5, 0.5, 1.5, 1.5, 0.5, 0.5]),
                  stroke="#cc0000", width=1.6)
    svg_path = fig.save(out / f"{stem}.svg")
    return [csv_path, svg_path]


def _risk_sweep_rows(config: ExperimentConfig):
    process = ProcessSpec(kind=ProcessKind.AR1_PIECEWISE, n=max(config.n_grid),
                          seed=0, burn_in=config.burn_in)
    reference = two_level()
    rows = []
    for n in config.n_grid:
        m = histogram_bins_bv(n, config.bins_constant)
        report = monte_carlo_risk(process, HistogramSpec(m=m), reference, n=n,
                                  trials=config.trials, p=config.p,
                                  master_seed=_row_seed(config.master_seed, n),
                                  workers=config.threads)
        rows.append((n, m, report.mean_risk, report.std_error))
    return rows


def _risk_table_sweep(config: ExperimentConfig, out: Path) -> list[Path]:
    rows = _risk_sweep_rows(config)
    csv_path = emit_csv(out / "risk_table.csv",
                        ["n", "m", "mean_risk", "std_error"], rows)
    return [csv_path]


def _risk_slope_plot(config: ExperimentConfig, out: Path) -> list[Path]:
    rows = _risk_sweep_rows(config)
    slope = loglog_slope([(n, risk) for n, _, risk, _ in rows])
    table_path = emit_csv(out / "risk_slope_table.csv",
                          ["n", "m", "mean_risk", "std_error"], rows)
    summary_path = emit_csv(out / "risk_slope_summary.csv",
                            ["slope", "reference_exponent"], [(slope, -1.0 / 3.0)])

    ns = np.array([r[0] for r in rows], dtype=float)
    risks = np.array([r[2] for r in rows])
    # reference curve c * n^(-1/3), c fitted so the curve passes the data cloud
    c = float(np.exp(np.mean(np.log(risks) + np.log(ns) / 3.0)))
    ref_curve = c * ns ** (-1.0 / 3.0)
    fig = SvgFigure(title=f"L1 risk vs n (slope {slope:.3f})",
                    xlabel="log10 n" if config.loglog else "n",
                    ylabel="log10 risk" if config.loglog else "risk")
    if config.loglog:
        xs, ys, yr = np.log10(ns), np.log10(risks), np.log10(ref_curve)
    else:
        xs, ys, yr = ns, risks, ref_curve
    pad_x = 0.03 * (xs.max() - xs.min())
    lo_y = min(ys.min(), yr.min())
    hi_y = max(ys.max(), yr.max())
    pad_y = 0.08 * (hi_y - lo_y)
    fig.set_limits((xs.min() - pad_x, xs.max() + pad_x),
                   (lo_y - pad_y, hi_y + pad_y))
    fig.add_curve(xs, yr, stroke="#cc0000", width=1.4)
    fig.add_points(xs, ys)
    svg_path = fig.save(out / "risk_slope.svg")
    return [table_path, summary_path, svg_path]


def _lsv_histogram_figure(config: ExperimentConfig, out: Path) -> list[Path]:
    spec = ProcessSpec(kind=ProcessKind.LSV_TRAJECTORY, n=config.n,
                       seed=config.master_seed, burn_in=config.burn_in,
                       gamma=config.gamma)
    sample = generate(spec)
    m = config.m if config.m is not None else histogram_bins_lsv(config.n, config.gamma)
    estimate = histogram_estimate(sample, m)
    heights = estimate.bin_values()
    edges = estimate.breakpoints()
    mids = (edges[:-1] + edges[1:]) / 2.0
    equiv = equivalent_density(mids, config.gamma)

    gamma_tag = f"{config.gamma}".replace(".", "p")
    stem = f"lsv_histogram_gamma{gamma_tag}_n{config.n}"
    csv_path = emit_csv(out / f"{stem}.csv",
                        ["bin", "left", "right", "height", "equivalent_density_at_mid"],
                        [(j + 1, float(edges[j]), float(edges[j + 1]),
                          float(heights[j]), float(equiv[j])) for j in range(m)])
    fig = SvgFigure(title=f"invariant density, gamma={config.gamma}, n={config.n}, m={m}",
                    xlabel="x", ylabel="density")
    top = 1.1 * max(float(heights.max()), float(equiv.max()))
    fig.set_limits((0.0, 1.0), (0.0, top))
    fig.add_bars(edges, heights)
    curve_x = np.linspace(1.0 / (2.0 * m), 1.0, 512)
    fig.add_curve(curve_x, equivalent_density(curve_x, config.gamma),
                  stroke="#cc0000", width=1.6)
    svg_path = fig.save(out / f"{stem}.svg")
    return [csv_path, svg_path]


def _coefficient_report(config: ExperimentConfig, out: Path) -> list[Path]:
    rows = []
    for k in range(1, config.k_max + 1):
        beta1 = beta1_estimate(k, config.quad_nodes)
        bound = 2.0**-k
        rows.append((k, beta1, bound, beta1 / bound))
    coeff_path = emit_csv(out / "coefficients.csv",
                          ["k", "beta1", "bound", "beta1_over_bound"], rows)
    pair_rows = []
    for i, j in ((2, 1), (3, 2), (4, 3), (6, 4), (8, 6)):
        lower = beta2_pair_lower_bound(i, j, grid=128, x0_nodes=17)
        pair_rows.append((i, j, 128, lower, 2.0**-j))
    pair_path = emit_csv(out / "pair_coefficient_lower_bounds.csv",
                         ["i", "j", "grid", "grid_lower_bound", "bound"], pair_rows)
    return [coeff_path, pair_path]


_RUNNERS = {
    "kernel-gaussian-figure": _kernel_gaussian_figure,
    "histogram-two-level-figure": _histogram_two_level_figure,
    "risk-table-sweep": _risk_table_sweep,
    "risk-slope-plot": _risk_slope_plot,
    "lsv-histogram-figure": _lsv_histogram_figure,
    "coefficient-report": _coefficient_report,
}
