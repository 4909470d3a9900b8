# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import pytest

from analysis.population import PopulationDistribution
from trainer.record import RunRecord, RunStatus

WIDTHS = (64, 128, 256)


@pytest.fixture
def make_population():
    def _make(values, scale_label='d1-w64', param_count=None, seeds=None, metric='em', eval_length=10):
        values = list(values)
        return PopulationDistribution(
            task_kind='count', scale_label=scale_label, metric_name=metric, values=values,
            seed_ids=seeds if seeds is not None else list(range(len(values))),
            param_count=param_count, eval_length=eval_length)
    return _make


@pytest.fixture
def make_record():
    def _make(seed, width=64, em=0.5, status=RunStatus.DONE, depth=1):
        return RunRecord(
            task_kind='count', seed=seed,
            model_config={'depth': depth, 'n_heads': width // 64, 'head_dim': 64},
            train_config={'steps': 10},
            scale_label='d{}-w{}'.format(depth, width), param_count=1000 * width * depth, status=status,
            metrics={} if status == RunStatus.FAILED else {
                'em': {10: em, 20: em / 2},
                'continuous_error': {10: 1.0 - em, 20: 1.0},
                'minprob': {10: em * 0.9, 20: em * 0.4},
                'mean_nll': {10: 1.0, 20: 2.0},
            },
            final_train_loss=None if status == RunStatus.FAILED else 0.05 + 0.001 * seed,
        )
    return _make


@pytest.fixture
def drifting_records(make_record):
    """ Six seeds per width, EM climbing from 0 to 1 as width grows. """
    records = []
    for step, width in enumerate(WIDTHS):
        for seed in range(6):
            em = min(1.0, max(0.0, step * 0.5 + 0.05 * (seed - 2.5)))
            records.append(make_record(seed, width=width, em=em))
    return records
