# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from model import param_count, scale_label
from trainer import RunRecord, RunStatus


def make_cell_record(label, seed, status=RunStatus.DONE):
    return RunRecord(task_kind='count', seed=seed, model_config={}, train_config={}, scale_label=label,
                     param_count=1, status=status)


def fake_record(model_config, train_config, status=RunStatus.DONE, error=None):
    """ What a finished run would report, with em@4 = seed / 10. """
    return RunRecord(
        task_kind=train_config.task_kind, seed=train_config.seed,
        model_config=model_config.as_dict(), train_config=train_config.as_dict(),
        scale_label=scale_label(model_config), param_count=param_count(model_config),
        status=status, error=error,
        metrics={} if error else {'em': {4: train_config.seed / 10.0}},
        final_train_loss=None if error else 0.5,
    )
