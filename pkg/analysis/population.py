# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict, defaultdict
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from analysis.errors import AnalysisError

log = logging.getLogger(__name__)


class SweepAxis(object):

    FIXED_DEPTH_SCALE_WIDTH = 'fixed_depth_scale_width'
    FIXED_WIDTH_SCALE_DEPTH = 'fixed_width_scale_depth'

    ALL = (FIXED_DEPTH_SCALE_WIDTH, FIXED_WIDTH_SCALE_DEPTH)


@dataclass
class PopulationDistribution:
    """ One metric over every seed trained at one scale. """
    task_kind: str
    scale_label: str
    metric_name: str
    values: np.ndarray
    seed_ids: List[int]
    param_count: Optional[int] = None
    axis_scale: Optional[int] = None
    eval_length: Optional[int] = None

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        self.seed_ids = [int(s) for s in self.seed_ids]
        if self.values.ndim != 1 or len(self.values) < 1:
            raise AnalysisError("population {} has no values".format(self.scale_label))
        if len(self.values) != len(self.seed_ids):
            raise AnalysisError("population {} has {} values for {} seeds".format(
                self.scale_label, len(self.values), len(self.seed_ids)))
        if not np.isfinite(self.values).all():
            raise AnalysisError("population {} holds non-finite values".format(self.scale_label))
        if len(set(self.seed_ids)) != len(self.seed_ids):
            raise AnalysisError("population {} repeats a seed".format(self.scale_label))

    def __len__(self):
        return len(self.values)

    def by_seed(self):
        return dict(zip(self.seed_ids, self.values.tolist()))


@dataclass
class ScalingCurve:
    """ One value per scale, scales ascending by parameter count when counts are known. """
    scale_labels: List[str]
    y: np.ndarray
    param_counts: List[int] = field(default_factory=list)

    def __post_init__(self):
        self.y = np.asarray(self.y, dtype=np.float64)
        if len(self.scale_labels) < 2 or len(self.y) != len(self.scale_labels):
            raise AnalysisError("a scaling curve needs one value for each of at least two scales")
        if len(set(self.scale_labels)) != len(self.scale_labels):
            raise AnalysisError("scaling curve repeats a scale")
        if self.param_counts:
            if len(self.param_counts) != len(self.scale_labels):
                raise AnalysisError("param_counts do not align with scale_labels")
            if any(a >= b for a, b in zip(self.param_counts, self.param_counts[1:])):
                raise AnalysisError("scales must be strictly ascending by parameter count")

    def __len__(self):
        return len(self.y)


def order_by_scale(populations):
    """
    Ascending by parameter count, else by axis scale when some count is
    missing. Populations known by neither keep the order they came in.
    """
    populations = list(populations)
    for attr in ('param_count', 'axis_scale'):
        keys = [getattr(p, attr) for p in populations]
        if None not in keys:
            return sorted(populations, key=lambda p: (getattr(p, attr), p.scale_label))
    return populations


def check_same_metric(populations):
    if not populations:
        raise AnalysisError("no populations")
    metrics = {(p.task_kind, p.metric_name, p.eval_length) for p in populations}
    if len(metrics) != 1:
        raise AnalysisError("populations mix metrics: {}".format(sorted(metrics, key=str)))


def curve_of(populations, statistic):
    """ A ScalingCurve of statistic(values) over populations ordered by scale. """
    populations = order_by_scale(populations)
    counts = [p.param_count for p in populations]
    return ScalingCurve(
        scale_labels=[p.scale_label for p in populations],
        y=[statistic(p.values) for p in populations],
        param_counts=counts if None not in counts else [],
    )


def axis_scale(model_config, axis):
    if not model_config:
        return None
    if axis == SweepAxis.FIXED_WIDTH_SCALE_DEPTH:
        return model_config['depth']
    return model_config['n_heads'] * model_config['head_dim']


def populations_from_records(records, axis=SweepAxis.FIXED_DEPTH_SCALE_WIDTH):
    """
    Group successful RunRecords into populations keyed by
    (task, metric, eval_length), each a list ordered by scale.
    final_train_loss forms populations with eval_length None.
    """
    grouped = defaultdict(lambda: defaultdict(list))
    info = {}
    skipped = 0
    for record in records:
        if not record.ok:
            skipped += 1
            continue
        info[record.scale_label] = (record.param_count, axis_scale(record.model_config, axis))
        for metric, by_length in record.metrics.items():
            for length, value in by_length.items():
                grouped[(record.task_kind, metric, int(length))][record.scale_label].append((record.seed, value))
        if record.final_train_loss is not None:
            grouped[(record.task_kind, 'final_train_loss', None)][record.scale_label].append(
                (record.seed, record.final_train_loss))

    if skipped:
        log.warning("left %d failed runs out of the populations", skipped)

    result = OrderedDict()
    for (task, metric, length), scales in sorted(grouped.items(), key=lambda kv: str(kv[0])):
        populations = []
        for label, pairs in scales.items():
            pairs = [(seed, value) for seed, value in pairs if np.isfinite(value)]
            if not pairs:
                continue
            seeds, values = zip(*pairs)
            populations.append(PopulationDistribution(
                task_kind=task, scale_label=label, metric_name=metric, values=values, seed_ids=seeds,
                param_count=info[label][0], axis_scale=info[label][1], eval_length=length))
        result[(task, metric, length)] = order_by_scale(populations)
    return result
