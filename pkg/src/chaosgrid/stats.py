"""Statistics for comparing generators: spread, drift, distribution shape.

Covers the population standard deviation, the least-squares regression
line of value against 1-based sample index (a flat slope means no
drift), fixed-range histograms over [0,1], Pearson correlation between
paired sequences, and long-run attractor sampling across a parameter
range (bifurcation data).
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass
from typing import Sequence

from .logistic import logistic_step

HistogramBin = tuple[float, float, int]


@dataclass(frozen=True)
class StatsReport:
    """Summary of one sequence; histogram bins partition [0,1]."""

    count: int
    mean: float
    std_dev: float
    histogram: list[HistogramBin]
    lsrl_intercept: float
    lsrl_slope: float


@dataclass(frozen=True)
class BifurcationPoint:
    r: float
    attractor_samples: tuple[float, ...]


def std_dev(values: Sequence[float]) -> float:
    """Population standard deviation, sqrt(sum((x-mu)^2)/N)."""
    if len(values) == 0:
        raise ValueError("std_dev needs at least one value")
    return statistics.pstdev(values)


def lsrl(values: Sequence[float]) -> tuple[float, float]:
    """(intercept, slope) of the OLS fit of value against 1-based index."""
    if len(values) < 2:
        raise ValueError("lsrl needs at least two values")
    fit = statistics.linear_regression(range(1, len(values) + 1), values)
    return fit.intercept, fit.slope


def histogram(values: Sequence[float], bins: int = 10) -> list[HistogramBin]:
    """Counts over `bins` equal-width bins of [0,1]; the value 1.0 goes in the last bin."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    counts = [0] * bins
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"value {v!r} out of [0,1]")
        counts[min(int(v * bins), bins - 1)] += 1
    return [(i / bins, (i + 1) / bins, counts[i]) for i in range(bins)]


def correlation(seq_a: Sequence[float], seq_b: Sequence[float]) -> float:
    """Pearson correlation coefficient of the paired sequences."""
    if len(seq_a) != len(seq_b):
        raise ValueError(f"length mismatch: {len(seq_a)} vs {len(seq_b)}")
    if len(seq_a) < 2:
        raise ValueError("correlation needs at least two pairs")
    try:
        rho = statistics.correlation(seq_a, seq_b)
    except statistics.StatisticsError as exc:
        raise ValueError("correlation undefined for zero-variance input") from exc
    # rounding can push perfectly collinear inputs an ulp past +/-1
    return max(-1.0, min(1.0, rho))


def describe(values: Sequence[float], bins: int = 10) -> StatsReport:
    """Full report for one sequence."""
    intercept, slope = lsrl(values)
    return StatsReport(
        count=len(values),
        mean=statistics.fmean(values),
        std_dev=std_dev(values),
        histogram=histogram(values, bins),
        lsrl_intercept=intercept,
        lsrl_slope=slope,
    )


def bifurcation_data(
    r_min: float,
    r_max: float,
    r_steps: int,
    settle: int = 500,
    samples: int = 200,
    x0: float = 0.5,
) -> list[BifurcationPoint]:
    """Attractor samples for r_steps equally spaced r values in [r_min, r_max].

    For each r the map is restarted from x0, iterated `settle` times to
    reach the attractor, then sampled `samples` times.
    """
    if not 0.0 <= r_min < r_max <= 4.0:
        raise ValueError("need 0 <= r_min < r_max <= 4")
    if r_steps < 1:
        raise ValueError("r_steps must be >= 1")
    if settle < 0:
        raise ValueError("settle must be >= 0")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not 0.0 <= x0 <= 1.0:
        raise ValueError("x0 out of [0,1]")

    if r_steps == 1:
        r_values = [r_min]
    else:
        span = r_max - r_min
        r_values = [r_min + i * span / (r_steps - 1) for i in range(r_steps - 1)]
        r_values.append(r_max)  # avoid accumulated rounding at the endpoint

    points = []
    for r in r_values:
        x = x0
        for _ in range(settle):
            x = logistic_step(x, r)
        out = []
        for _ in range(samples):
            x = logistic_step(x, r)
            out.append(x)
        points.append(BifurcationPoint(r=r, attractor_samples=tuple(out)))
    return points


def comparison_csv(logistic_report: StatsReport, mt_report: StatsReport) -> str:
    """Two-column metric table (logistic map vs MT19937), one metric per row."""
    lines = ["metric,logistic_map,mt19937"]
    lines.append(f"count,{logistic_report.count},{mt_report.count}")
    lines.append(f"mean,{logistic_report.mean!r},{mt_report.mean!r}")
    lines.append(f"std_dev,{logistic_report.std_dev!r},{mt_report.std_dev!r}")
    lines.append(f"lsrl_intercept,{logistic_report.lsrl_intercept!r},{mt_report.lsrl_intercept!r}")
    lines.append(f"lsrl_slope,{logistic_report.lsrl_slope!r},{mt_report.lsrl_slope!r}")
    for i, ((_, _, count_l), (_, _, count_m)) in enumerate(
        zip(logistic_report.histogram, mt_report.histogram)
    ):
        lines.append(f"histogram_bin_{i},{count_l},{count_m}")
    return "\n".join(lines) + "\n"


def bifurcation_csv(points: Sequence[BifurcationPoint]) -> str:
    """Flat "r,x" rows for external plotting."""
    lines = ["r,x"]
    for point in points:
        for x in point.attractor_samples:
            lines.append(f"{point.r!r},{x!r}")
    return "\n".join(lines) + "\n"
