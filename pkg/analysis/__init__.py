# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .errors import AnalysisError, BootstrapError
from .population import (
    PopulationDistribution, ScalingCurve, SweepAxis, axis_scale, curve_of, order_by_scale,
    populations_from_records,
)
from .mixture import DEFAULT_THRESHOLDS, MixtureStats, mixture_stats, threshold_for
from .bootstrap import Statistic, bootstrap_ci
from .density import (
    KdeSettings, bimodality_onset, find_peaks_kde, histogram, is_bimodal, kde, kde_with, mode_estimate,
    quantile_summary, silverman_bandwidth,
)
from .wasserstein import wasserstein2, wasserstein_drift
from .curves import (
    UShape, breakthroughness, linearity, minimum_capacity, mode_breakthrough, rank_seeds, seed_curves,
    success_curve, total_change, u_shape,
)
from .ingest import ingest_run_records, records_from_populations, write_populations
from .report import AnalysisReport, AnalysisSettings, Analyzer, analyze, infer_axis


__all__ = [
    'AnalysisError', 'BootstrapError',
    'PopulationDistribution', 'ScalingCurve', 'SweepAxis', 'axis_scale', 'curve_of', 'order_by_scale',
    'populations_from_records',
    'DEFAULT_THRESHOLDS', 'MixtureStats', 'mixture_stats', 'threshold_for',
    'Statistic', 'bootstrap_ci',
    'KdeSettings', 'bimodality_onset', 'find_peaks_kde', 'histogram', 'is_bimodal', 'kde', 'kde_with',
    'mode_estimate', 'quantile_summary', 'silverman_bandwidth',
    'wasserstein2', 'wasserstein_drift',
    'UShape', 'breakthroughness', 'linearity', 'minimum_capacity', 'mode_breakthrough', 'rank_seeds',
    'seed_curves', 'success_curve', 'total_change', 'u_shape',
    'ingest_run_records', 'records_from_populations', 'write_populations',
    'AnalysisReport', 'AnalysisSettings', 'Analyzer', 'analyze', 'infer_axis',
]
