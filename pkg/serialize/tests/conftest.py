# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import pytest

from trainer.record import RunRecord, RunStatus


@pytest.fixture
def make_record():
    def _make(seed=0, scale_label='d1-w64', status=RunStatus.DONE, em=0.5, **kwargs):
        fields = dict(
            task_kind='count', seed=seed,
            model_config={'depth': 1, 'n_heads': 1, 'head_dim': 64},
            train_config={'steps': 10},
            scale_label=scale_label, param_count=1000, status=status,
            metrics={'em': {10: em}, 'continuous_error': {10: 0.25}},
            final_train_loss=0.1,
            train_loss_trace=[[0, 2.0], [9, 0.1]],
        )
        fields.update(kwargs)
        return RunRecord(**fields)
    return _make
