# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import os
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from jinja2 import Environment, FileSystemLoader

from analysis.bootstrap import DEFAULT_LEVEL, DEFAULT_RESAMPLES, Statistic, bootstrap_ci
from analysis.curves import DEFAULT_TOP_K, minimum_capacity, mode_breakthrough, rank_seeds, seed_curves, u_shape
from analysis.density import KdeSettings, bimodality_onset, histogram, kde_with, mode_estimate, quantile_summary
from analysis.errors import AnalysisError
from analysis.mixture import mixture_stats, threshold_for
from analysis.population import ScalingCurve, SweepAxis, populations_from_records
from analysis.wasserstein import wasserstein2
from metrics.evaluation import MetricNames
from serialize.records import check_unique_seeds, read_records
from serialize.tables import CURVES_COLUMNS, HISTOGRAM_COLUMNS, KDE_COLUMNS, SEEDS_COLUMNS, write_table
from utils.util import atomic_write

log = logging.getLogger(__name__)


CURVES_FILE = 'curves.csv'
KDE_FILE = 'kde.csv'
HISTOGRAMS_FILE = 'histograms.csv'
SEEDS_FILE = 'seeds.csv'
REPORT_FILE = 'report.txt'
REPORT_TEMPLATE = 'report.jinja'

# mixture statistics, breakthrough and capacity are read off exact match
MIXTURE_METRICS = (MetricNames.EM,)


def templates_dir():
    here = os.path.dirname(os.path.dirname(os.path.realpath(__file__)))
    return os.path.join(here, 'templates')


def metric_label(metric, eval_length):
    return metric if eval_length is None else '{}@{}'.format(metric, eval_length)


@dataclass
class AnalysisSettings:
    metrics: List[str] = field(default_factory=lambda: [MetricNames.EM, MetricNames.CONTINUOUS_ERROR,
                                                        MetricNames.MINPROB, MetricNames.FINAL_TRAIN_LOSS])
    eval_length: Optional[int] = None
    threshold: Optional[float] = None
    bootstrap_resamples: int = DEFAULT_RESAMPLES
    bootstrap_level: float = DEFAULT_LEVEL
    bootstrap_seed: int = 0
    kde: KdeSettings = field(default_factory=KdeSettings)
    top_k: int = DEFAULT_TOP_K

    @classmethod
    def from_config(cls, analysis_config, threshold=None):
        defaults = cls()
        return cls(
            metrics=list(analysis_config.get('metrics') or defaults.metrics),
            eval_length=analysis_config.get('eval_length'),
            threshold=threshold if threshold is not None else analysis_config.get('threshold'),
            bootstrap_resamples=analysis_config.get('bootstrap_resamples', DEFAULT_RESAMPLES),
            bootstrap_level=analysis_config.get('bootstrap_level', DEFAULT_LEVEL),
            bootstrap_seed=analysis_config.get('bootstrap_seed', 0),
            kde=KdeSettings.from_config(analysis_config),
            top_k=analysis_config.get('top_k', DEFAULT_TOP_K),
        )


@dataclass
class AnalysisReport:
    curves: list = field(default_factory=list)
    kde: list = field(default_factory=list)
    histograms: list = field(default_factory=list)
    seeds: list = field(default_factory=list)
    sections: list = field(default_factory=list)

    def write(self, out_dir):
        if not os.path.isdir(out_dir):
            os.makedirs(out_dir)
        write_table(os.path.join(out_dir, CURVES_FILE), CURVES_COLUMNS, self.curves)
        write_table(os.path.join(out_dir, KDE_FILE), KDE_COLUMNS, self.kde)
        write_table(os.path.join(out_dir, HISTOGRAMS_FILE), HISTOGRAM_COLUMNS, self.histograms)
        write_table(os.path.join(out_dir, SEEDS_FILE), SEEDS_COLUMNS, self.seeds)
        atomic_write(os.path.join(out_dir, REPORT_FILE), self.render())

    def render(self):
        template_env = Environment(loader=FileSystemLoader(templates_dir()), trim_blocks=True, lstrip_blocks=True)
        template = template_env.get_template(REPORT_TEMPLATE)
        return template.render(sections=self.sections)


class Analyzer(object):
    """
    Turns RunRecords into the curve, density, histogram and seed tables
    plus a text summary, one section per (task, metric, eval length).
    """

    def __init__(self, settings=None, axis=SweepAxis.FIXED_DEPTH_SCALE_WIDTH):
        self.settings = settings or AnalysisSettings()
        self.axis = axis

    def _wanted(self, metric, eval_length):
        if metric not in self.settings.metrics:
            return False
        return eval_length is None or self.settings.eval_length is None or eval_length == self.settings.eval_length

    def analyze(self, records):
        check_unique_seeds(records)
        grouped = populations_from_records(records, self.axis)

        report = AnalysisReport()
        found = set()
        for (task, metric, eval_length), populations in grouped.items():
            if not populations or not self._wanted(metric, eval_length):
                continue
            found.add(metric)
            self._analyze_group(report, task, metric, eval_length, populations)

        missing = [m for m in self.settings.metrics if m not in found]
        if missing:
            raise AnalysisError("metric(s) missing from the records: {}".format(', '.join(missing)))
        return report

    def _ci(self, values, statistic, threshold=None):
        return bootstrap_ci(values, statistic, n_resamples=self.settings.bootstrap_resamples,
                            level=self.settings.bootstrap_level, seed=self.settings.bootstrap_seed,
                            threshold=threshold)

    def _analyze_group(self, report, task, metric, eval_length, populations):
        label = metric_label(metric, eval_length)
        log.info("analyzing %s %s over %d scales", task, label, len(populations))
        mixture = metric in MIXTURE_METRICS
        threshold = threshold_for(task, self.settings.threshold) if mixture else None
        largest = populations[-1]

        mean_success = []
        for population in populations:
            base = OrderedDict([('task', task), ('metric', label), ('axis_scale', population.axis_scale)])

            def curve_row(statistic, value, ci=(None, None)):
                row = OrderedDict(base)
                row.update(param_count=population.param_count, statistic=statistic, value=value,
                           ci_lo=ci[0], ci_hi=ci[1])
                report.curves.append(row)

            values = population.values
            curve_row('mode', mode_estimate(values, self.settings.kde))
            curve_row('mean', float(values.mean()), self._ci(values, Statistic.MEAN))
            if mixture:
                stats = mixture_stats(population, threshold)
                curve_row('p_success', stats.p_success, self._ci(values, Statistic.P_SUCCESS, threshold))
                curve_row('mean_success', stats.mean_success,
                          self._ci(values, Statistic.MEAN_SUCCESS, threshold))
                curve_row('mean_fail', stats.mean_fail, self._ci(values, Statistic.MEAN_FAIL, threshold))
                mean_success.append(stats.mean_success)
            curve_row('w2_drift', wasserstein2(values, largest.values))
            for name, value in quantile_summary(values).items():
                curve_row(name, value)
            curve_row('n_seeds', len(population))

            xs, density = kde_with(values, self.settings.kde)
            for x, d in zip(xs.tolist(), density.tolist()):
                row = OrderedDict(base)
                row.update(grid_point=x, density=d)
                report.kde.append(row)

            edges, counts = histogram(values, metric in MetricNames.BOUNDED)
            for lo, hi, count in zip(edges[:-1].tolist(), edges[1:].tolist(), counts.tolist()):
                row = OrderedDict(base)
                row.update(bin_lo=lo, bin_hi=hi, count=int(count))
                report.histograms.append(row)

        report.sections.append(self._section(report, task, metric, label, populations, threshold, mean_success))

    def _section(self, report, task, metric, label, populations, threshold, mean_success):
        higher_is_better = metric in MetricNames.HIGHER_IS_BETTER
        labels = [p.scale_label for p in populations]
        section = OrderedDict([
            ('task', task),
            ('metric', label),
            ('scales', labels),
            ('valley_ratio', self.settings.kde.valley_ratio),
            ('bimodality_onset', bimodality_onset(populations, self.settings.kde)),
            ('threshold', threshold),
            ('mode_breakthrough', None),
            ('minimum_capacity', None),
            ('u_shape_mean', None),
            ('u_shape_success', None),
            ('top_seeds', OrderedDict()),
        ])
        if threshold is not None:
            section['mode_breakthrough'] = mode_breakthrough(populations, threshold)
            section['minimum_capacity'] = minimum_capacity(populations, threshold)

        if len(populations) < 2:
            return section

        section['u_shape_mean'] = u_shape(
            ScalingCurve(labels, [p.values.mean() for p in populations]), higher_is_better)
        if mean_success and None not in mean_success:
            section['u_shape_success'] = u_shape(ScalingCurve(labels, mean_success), higher_is_better)

        curves = seed_curves(populations)
        scores, top = rank_seeds(curves, self.settings.top_k)
        for seed, score in scores.items():
            row = OrderedDict([('task', task), ('metric', label), ('seed', seed)])
            row.update(score)
            report.seeds.append(row)
        section['top_seeds'] = top
        return section


def infer_axis(records):
    """ fixed_width_scale_depth when every run shares one width but depths vary. """
    configs = [r.model_config for r in records if r.model_config]
    widths = {c['n_heads'] * c['head_dim'] for c in configs}
    depths = {c['depth'] for c in configs}
    if len(widths) == 1 and len(depths) > 1:
        return SweepAxis.FIXED_WIDTH_SCALE_DEPTH
    return SweepAxis.FIXED_DEPTH_SCALE_WIDTH


def analyze(records_path, out_dir, settings=None, axis=None):
    """
    Read a records file and write every analysis table into out_dir. The
    sweep axis is inferred from the records' model configs when not given.
    """
    records = read_records(records_path)
    if not records:
        raise AnalysisError("no records in {}".format(records_path))
    axis = axis or infer_axis(records)

    report = Analyzer(settings, axis).analyze(records)
    report.write(out_dir)
    log.info("analysis of %d records written to %s", len(records), out_dir)
    return report
