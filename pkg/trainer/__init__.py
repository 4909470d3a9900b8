# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from model import TrainingDivergence
from .config import (
    ADDITION_PRESET, COUNT_PRESET, DESK_ADDITION_PRESET, DESK_COUNT_PRESET, PRESETS,
    TrainConfig, TrainConfigError,
)
from .schedule import lr_at
from .optimizer import MomentState, optimizer_step
from .record import RECORD_FORMAT_VERSION, RunRecord, RunStatus
from .trainer import Trainer, build_eval_sets, split_seed, train_run


__all__ = [
    'TrainingDivergence',
    'ADDITION_PRESET', 'COUNT_PRESET', 'DESK_ADDITION_PRESET', 'DESK_COUNT_PRESET', 'PRESETS',
    'TrainConfig', 'TrainConfigError',
    'lr_at',
    'MomentState', 'optimizer_step',
    'RECORD_FORMAT_VERSION', 'RunRecord', 'RunStatus',
    'Trainer', 'build_eval_sets', 'split_seed', 'train_run',
]
