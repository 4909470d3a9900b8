# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging

import numpy as np

from analysis.errors import BootstrapError

log = logging.getLogger(__name__)


DEFAULT_RESAMPLES = 1000
DEFAULT_LEVEL = 0.95
# redraws allowed per requested resample before giving up on undefined ones
REDRAW_CAP_FACTOR = 10


class Statistic(object):

    MEAN = 'mean'
    P_SUCCESS = 'p_success'
    MEAN_SUCCESS = 'mean_success'
    MEAN_FAIL = 'mean_fail'

    ALL = (MEAN, P_SUCCESS, MEAN_SUCCESS, MEAN_FAIL)
    THRESHOLDED = (P_SUCCESS, MEAN_SUCCESS, MEAN_FAIL)


def _rowwise(statistic, samples, threshold):
    """ statistic over each row of samples; NaN where it is undefined. """
    if statistic == Statistic.MEAN:
        return samples.mean(axis=1)
    success = samples > threshold
    if statistic == Statistic.P_SUCCESS:
        return success.mean(axis=1)

    chosen = success if statistic == Statistic.MEAN_SUCCESS else ~success
    counts = chosen.sum(axis=1)
    totals = np.where(chosen, samples, 0.0).sum(axis=1)
    with np.errstate(invalid='ignore', divide='ignore'):
        return np.where(counts > 0, totals / counts, np.nan)


def bootstrap_ci(values, statistic=Statistic.MEAN, n_resamples=DEFAULT_RESAMPLES, level=DEFAULT_LEVEL, seed=0,
                 threshold=None):
    """
    Percentile bootstrap interval of a population statistic. Resamples on
    which the statistic is undefined (an empty success or failure set) are
    redrawn, up to a cap. Returns (nan, nan) when the statistic is
    undefined on the sample itself.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise BootstrapError("bootstrap needs a non-empty 1-d sample")
    if n_resamples < 1:
        raise BootstrapError("n_resamples must be at least 1")
    if not 0.0 < level < 1.0:
        raise BootstrapError("level must lie strictly between 0 and 1")
    if statistic not in Statistic.ALL:
        raise BootstrapError("unknown statistic: {}".format(statistic))
    if statistic in Statistic.THRESHOLDED and threshold is None:
        raise BootstrapError("{} needs a threshold".format(statistic))

    if np.isnan(_rowwise(statistic, values[None, :], threshold)[0]):
        return float('nan'), float('nan')

    rng = np.random.default_rng(seed)
    n = values.size
    stats = _rowwise(statistic, values[rng.integers(0, n, size=(n_resamples, n))], threshold)

    redraws = 0
    cap = REDRAW_CAP_FACTOR * n_resamples
    undefined = np.flatnonzero(np.isnan(stats))
    while undefined.size and redraws < cap:
        batch = undefined[:cap - redraws]
        stats[batch] = _rowwise(statistic, values[rng.integers(0, n, size=(batch.size, n))], threshold)
        redraws += batch.size
        undefined = np.flatnonzero(np.isnan(stats))

    if undefined.size:
        log.warning("%s: %d of %d resamples still undefined after %d redraws, dropping them",
                    statistic, undefined.size, n_resamples, redraws)
        stats = stats[~np.isnan(stats)]

    tail = 100.0 * (1.0 - level) / 2.0
    lo, hi = np.percentile(stats, [tail, 100.0 - tail])
    return float(lo), float(hi)
