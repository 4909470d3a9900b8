# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import pytest

from config import new_config
from model import scale_label
from sweep import SweepConfig
from sweep.tests.records import fake_record


@pytest.fixture
def tiny_conf(tmp_path):
    conf = new_config()
    conf.set('task', 'count')
    conf.set('sweep_axis', 'fixed_depth_scale_width')
    conf.set('fixed_depth', 1)
    conf.set('hidden_dims', [8, 16])
    conf.set('head_dim', 8)
    conf.set('seeds', [0, 1])
    conf.set('train', {
        'max_train_length': 4, 'steps': 2, 'batch_size': 2, 'context_length': 32,
        'eval_lengths': [4, 6], 'eval_items': 2, 'log_every': 1,
    })
    conf.set('output_dir', str(tmp_path / 'sweep'))
    conf.set('max_parallel', 1)
    return conf


@pytest.fixture
def tiny_sweep(tiny_conf):
    return SweepConfig.from_config(tiny_conf)


@pytest.fixture
def fake_train_run():
    calls = []

    def _train_run(model_config, train_config, checkpoint_path=None, stop_event=None):
        calls.append((scale_label(model_config), train_config.seed))
        return fake_record(model_config, train_config)

    _train_run.calls = calls
    return _train_run
