# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy import signal, stats

from analysis.errors import AnalysisError

log = logging.getLogger(__name__)


DEFAULT_POINTS = 512
DEFAULT_VALLEY_RATIO = 0.8
DEFAULT_MIN_PEAK_FRACTION = 0.1
GRID_EXTENT = 3.0
BANDWIDTH_FLOOR = 1e-4
HISTOGRAM_BINS = 20


@dataclass
class KdeSettings:
    """
    bandwidth None means Silverman's rule; grid None means the data range
    widened by GRID_EXTENT bandwidths on each side.
    """
    bandwidth: Optional[float] = None
    grid: Optional[Tuple[float, float]] = None
    points: int = DEFAULT_POINTS
    valley_ratio: float = DEFAULT_VALLEY_RATIO
    min_peak_fraction: float = DEFAULT_MIN_PEAK_FRACTION

    @classmethod
    def from_config(cls, analysis_config):
        return cls(
            bandwidth=analysis_config.get('kde_bandwidth'),
            points=analysis_config.get('kde_points', DEFAULT_POINTS),
            valley_ratio=analysis_config.get('valley_ratio', DEFAULT_VALLEY_RATIO),
            min_peak_fraction=analysis_config.get('min_peak_fraction', DEFAULT_MIN_PEAK_FRACTION),
        )


def _values(values):
    values = np.asarray(getattr(values, 'values', values), dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise AnalysisError("density estimates need a non-empty 1-d sample")
    return values


def silverman_bandwidth(values):
    """
    0.9 * min(std, IQR / 1.34) * n^(-1/5), using std alone when the IQR is
    zero, floored at 1e-4 of the data range (or of max(|v|, 1) when every
    value is equal).
    """
    values = _values(values)
    std = values.std()
    q75, q25 = np.percentile(values, [75, 25])
    spread = min(std, (q75 - q25) / 1.34) if q75 > q25 else std
    bandwidth = 0.9 * spread * len(values) ** -0.2

    data_range = np.ptp(values)
    floor = BANDWIDTH_FLOOR * (data_range if data_range > 0 else max(np.abs(values).max(), 1.0))
    return max(bandwidth, floor)


def kde_grid(values, bandwidth, points=DEFAULT_POINTS, grid=None):
    if points < 2:
        raise AnalysisError("a KDE grid needs at least 2 points")
    if grid is None:
        grid = (values.min() - GRID_EXTENT * bandwidth, values.max() + GRID_EXTENT * bandwidth)
    lo, hi = grid
    if not hi > lo:
        raise AnalysisError("empty KDE grid [{}, {}]".format(lo, hi))
    return np.linspace(lo, hi, points)


def kde(values, bandwidth=None, grid=None):
    """
    Gaussian KDE of values. grid is (lo, hi, n_points) or None for the
    default grid. Returns (grid_points, density).
    """
    values = _values(values)
    if bandwidth is None:
        bandwidth = silverman_bandwidth(values)
    elif bandwidth <= 0:
        raise AnalysisError("bandwidth must be positive")

    if grid is None:
        xs = kde_grid(values, bandwidth)
    else:
        lo, hi, points = grid
        xs = kde_grid(values, bandwidth, points, (lo, hi))

    density = stats.norm.pdf(xs[:, None], loc=values[None, :], scale=bandwidth).mean(axis=1)
    return xs, density


def kde_with(values, settings):
    values = _values(values)
    bandwidth = settings.bandwidth or silverman_bandwidth(values)
    xs = kde_grid(values, bandwidth, settings.points, settings.grid)
    return kde(values, bandwidth, (xs[0], xs[-1], len(xs)))


def mode_estimate(values, settings=None):
    """ Grid location of the KDE maximum; the lowest location wins ties. """
    xs, density = kde_with(values, settings or KdeSettings())
    return float(xs[np.argmax(density)])


def find_peaks_kde(values, settings=None):
    """
    Local maxima of the KDE at least min_peak_fraction as tall as the
    highest one. Returns (grid_points, density, peak_indices).
    """
    settings = settings or KdeSettings()
    xs, density = kde_with(values, settings)
    padded = np.concatenate([[0.0], density, [0.0]])
    peaks, _ = signal.find_peaks(padded)
    peaks = peaks - 1
    if peaks.size:
        peaks = peaks[density[peaks] >= settings.min_peak_fraction * density[peaks].max()]
    return xs, density, peaks


def is_bimodal(values, settings=None):
    """ Two kept peaks with a valley at most valley_ratio times the smaller one. """
    settings = settings or KdeSettings()
    _, density, peaks = find_peaks_kde(values, settings)
    for left, right in zip(peaks, peaks[1:]):
        valley = density[left:right + 1].min()
        if valley <= settings.valley_ratio * min(density[left], density[right]):
            return True
    return False


def bimodality_onset(populations, settings=None):
    """ scale_label of the first bimodal population in scale order, else None. """
    if not populations:
        raise AnalysisError("no populations")
    for population in populations:
        if is_bimodal(population.values, settings):
            return population.scale_label
    return None


def histogram(values, bounded, bins=HISTOGRAM_BINS):
    """ (edges, counts): fixed [0, 1] bins for bounded metrics, data-range bins otherwise. """
    values = _values(values)
    value_range = (0.0, 1.0) if bounded else None
    if not bounded and np.ptp(values) == 0:
        value_range = (values[0] - 0.5, values[0] + 0.5)
    counts, edges = np.histogram(values, bins=bins, range=value_range)
    return edges, counts


def quantile_summary(values):
    values = _values(values)
    q = np.quantile(values, [0.0, 0.25, 0.5, 0.75, 1.0])
    return OrderedDict(zip(('min', 'q25', 'median', 'q75', 'max'), (float(v) for v in q)))
