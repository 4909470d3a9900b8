# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from dataclasses import dataclass
from typing import Optional

import numpy as np

from analysis.errors import AnalysisError


# success is EM strictly above these
DEFAULT_THRESHOLDS = {
    'count': 0.5,
    'addition': 0.2,
}


@dataclass
class MixtureStats:
    threshold: float
    p_success: float
    mean_success: Optional[float]
    mean_fail: Optional[float]
    mean_all: float


def _values(dist):
    values = np.asarray(getattr(dist, 'values', dist), dtype=np.float64)
    if values.size == 0:
        raise AnalysisError("empty population")
    return values


def mixture_stats(dist, threshold):
    """ Split a population into successes (> threshold) and failures. """
    values = _values(dist)
    success = values > threshold
    n_success = int(success.sum())
    return MixtureStats(
        threshold=threshold,
        p_success=n_success / len(values),
        mean_success=float(values[success].mean()) if n_success else None,
        mean_fail=float(values[~success].mean()) if n_success < len(values) else None,
        mean_all=float(values.mean()),
    )


def threshold_for(task_kind, threshold=None):
    if threshold is not None:
        return threshold
    try:
        return DEFAULT_THRESHOLDS[task_kind]
    except KeyError:
        raise AnalysisError("no default success threshold for task {}".format(task_kind))
