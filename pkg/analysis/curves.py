# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

import numpy as np

from analysis.errors import AnalysisError
from analysis.mixture import mixture_stats
from analysis.population import ScalingCurve, check_same_metric, order_by_scale

log = logging.getLogger(__name__)


DEFAULT_TOP_K = 5


def _y(curve):
    y = np.asarray(getattr(curve, 'y', curve), dtype=np.float64)
    if y.ndim != 1 or len(y) < 2:
        raise AnalysisError("a scaling curve needs at least two points")
    return y


def total_change(curve):
    """ sign(argmax - argmin) * (max - min). """
    y = _y(curve)
    return float(np.sign(np.argmax(y) - np.argmin(y)) * (y.max() - y.min()))


def _ratio(numerator, denominator):
    if numerator == 0:
        return 0.0
    if denominator == 0:
        return float(np.copysign(np.inf, numerator))
    return numerator / denominator


def linearity(curve):
    """ Total change over the root mean square of consecutive differences. """
    y = _y(curve)
    return _ratio(total_change(y), float(np.sqrt(np.mean(np.diff(y) ** 2))))


def breakthroughness(curve):
    """
    Total change over the root median square of consecutive differences;
    an even count takes the midpoint of the two central squares.
    """
    y = _y(curve)
    return _ratio(total_change(y), float(np.sqrt(np.median(np.diff(y) ** 2))))


def seed_curves(populations):
    """
    Per-seed ScalingCurves for the seeds present at every scale. A seed id
    names the same integer at each scale; its initializations are otherwise
    unrelated across scales.
    """
    check_same_metric(populations)
    populations = order_by_scale(populations)
    if len(populations) < 2:
        raise AnalysisError("seed curves need at least two scales")

    shared = set(populations[0].seed_ids)
    for population in populations[1:]:
        shared &= set(population.seed_ids)
    dropped = set().union(*(p.seed_ids for p in populations)) - shared
    if dropped:
        log.info("%d seeds are missing from some scale and get no curve", len(dropped))

    lookups = [p.by_seed() for p in populations]
    labels = [p.scale_label for p in populations]
    counts = [p.param_count for p in populations]
    return OrderedDict(
        (seed, ScalingCurve(scale_labels=labels, y=[lookup[seed] for lookup in lookups],
                            param_counts=counts if None not in counts else []))
        for seed in sorted(shared)
    )


def rank_seeds(curves, top_k=DEFAULT_TOP_K):
    """
    Scores every seed curve and returns {seed: {breakthroughness,
    linearity, rank_breakthroughness, rank_linearity}} plus the top_k seeds
    per score. Ranks start at 1 for the highest score.
    """
    scores = OrderedDict((seed, {'breakthroughness': breakthroughness(curve), 'linearity': linearity(curve)})
                         for seed, curve in curves.items())
    top = OrderedDict()
    for name in ('breakthroughness', 'linearity'):
        ordered = sorted(scores, key=lambda seed: (-scores[seed][name], seed))
        for rank, seed in enumerate(ordered, 1):
            scores[seed]['rank_' + name] = rank
        top[name] = [(seed, scores[seed][name]) for seed in ordered[:top_k]]
    return scores, top


def success_curve(populations, threshold):
    populations = order_by_scale(populations)
    return [(p.scale_label, mixture_stats(p, threshold).p_success) for p in populations]


def mode_breakthrough(populations, threshold):
    """
    The last scale before the success probability first exceeds 0.5, or
    None when it never does or already does at the smallest scale.
    """
    previous = None
    for label, p_success in success_curve(populations, threshold):
        if p_success > 0.5:
            return previous
        previous = label
    return None


def minimum_capacity(populations, threshold):
    """ The first scale at which any seed succeeds. """
    for label, p_success in success_curve(populations, threshold):
        if p_success > 0:
            return label
    return None


@dataclass
class UShape:
    is_u_shaped: bool
    minimum_scale: Optional[str]
    minimum_value: float


def u_shape(curve, higher_is_better=True):
    """
    A curve is U-shaped when an interior scale is worse than both ends:
    below them for higher-is-better metrics, above them otherwise.
    """
    y = _y(curve)
    labels = getattr(curve, 'scale_labels', None) or [str(i) for i in range(len(y))]
    oriented = y if higher_is_better else -y
    worst = int(np.argmin(oriented))
    interior = 0 < worst < len(y) - 1
    dips = interior and oriented[worst] < oriented[0] and oriented[worst] < oriented[-1]
    return UShape(is_u_shaped=bool(dips), minimum_scale=labels[worst], minimum_value=float(y[worst]))
