# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np

from analysis.errors import AnalysisError
from analysis.population import ScalingCurve, check_same_metric, order_by_scale


def _sorted(values):
    values = np.sort(np.asarray(getattr(values, 'values', values), dtype=np.float64))
    if values.ndim != 1 or values.size == 0:
        raise AnalysisError("wasserstein2 needs non-empty samples")
    return values


def wasserstein2(a, b):
    """
    W2 between two empirical distributions from their step quantile
    functions, integrated exactly over the merged breakpoints i/n and j/m.
    """
    a = _sorted(a)
    b = _sorted(b)
    n, m = len(a), len(b)
    if n == m:
        return float(np.sqrt(np.mean((a - b) ** 2)))

    breaks = np.union1d(np.arange(n + 1) / n, np.arange(m + 1) / m)
    widths = np.diff(breaks)
    mids = breaks[:-1] + widths / 2.0
    qa = a[np.minimum((mids * n).astype(np.int64), n - 1)]
    qb = b[np.minimum((mids * m).astype(np.int64), m - 1)]
    return float(np.sqrt(np.sum(widths * (qa - qb) ** 2)))


def wasserstein_drift(populations):
    """ W2 of every scale's population against the largest scale's. """
    check_same_metric(populations)
    populations = order_by_scale(populations)
    if len(populations) < 2:
        raise AnalysisError("drift needs at least two scales")
    last = populations[-1]
    counts = [p.param_count for p in populations]
    return ScalingCurve(
        scale_labels=[p.scale_label for p in populations],
        y=[wasserstein2(p.values, last.values) for p in populations],
        param_counts=counts if None not in counts else [],
    )
