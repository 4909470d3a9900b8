# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import List

from config import default
from taskgen import CountEvalMode, TaskKind, max_example_length

log = logging.getLogger(__name__)


SCHEDULE = 'cosine'
WARMUP_STEPS = 0


class TrainConfigError(ValueError):
    pass


@dataclass(frozen=True)
class TrainConfig:
    task_kind: str
    max_train_length: int
    steps: int
    batch_size: int
    context_length: int
    peak_lr: float
    weight_decay: float
    seed: int = 0
    eval_lengths: List[int] = field(default_factory=list)
    eval_items: int = 128
    eval_seed: int = default.DEFAULT_EVAL_SEED
    count_eval_mode: str = CountEvalMode.SAMPLED
    answer_only: bool = False
    min_train_length: int = 1
    schedule: str = SCHEDULE
    log_every: int = 50
    eval_every: int = 0
    early_stop: bool = False
    early_stop_window: int = 200
    checkpoint: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'eval_lengths', [int(l) for l in self.eval_lengths])
        self.validate()

    @property
    def max_eval_digits(self):
        """ Width of the addition hint vocabulary: the longest length ever seen. """
        return max(self.eval_lengths + [self.max_train_length])

    @property
    def in_distribution_length(self):
        inside = [l for l in self.eval_lengths if l <= self.max_train_length]
        return max(inside) if inside else self.max_train_length

    def validate(self):
        try:
            TaskKind.validate(self.task_kind)
        except ValueError as e:
            raise TrainConfigError(str(e))
        for name in ('max_train_length', 'batch_size', 'context_length', 'eval_items', 'min_train_length',
                     'log_every', 'early_stop_window'):
            if getattr(self, name) < 1:
                raise TrainConfigError("{} must be positive".format(name))
        if self.steps < 0 or self.eval_every < 0:
            raise TrainConfigError("steps and eval_every must not be negative")
        if self.min_train_length > self.max_train_length:
            raise TrainConfigError("min_train_length exceeds max_train_length")
        if self.peak_lr <= 0 or self.weight_decay < 0:
            raise TrainConfigError("peak_lr must be positive and weight_decay non-negative")
        if not self.eval_lengths or min(self.eval_lengths) < 1:
            raise TrainConfigError("eval_lengths must be a non-empty list of positive lengths")
        if self.count_eval_mode not in CountEvalMode.ALL:
            raise TrainConfigError("unknown count_eval_mode: {}".format(self.count_eval_mode))
        if self.schedule != SCHEDULE:
            raise TrainConfigError("unsupported schedule: {}".format(self.schedule))
        if self.early_stop and not self.eval_every:
            raise TrainConfigError("early_stop needs eval_every > 0")

        longest = max_example_length(self.task_kind, self.max_train_length)
        if longest > self.context_length:
            raise TrainConfigError("context_length {} cannot hold a training example of {} tokens".format(
                self.context_length, longest))

    def as_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(**data)
        except TypeError as e:
            raise TrainConfigError("invalid train config: {}".format(e))

    @classmethod
    def from_config(cls, config, seed=0):
        """ Build from a loaded Config's `task` and `train` sections. """
        return cls.from_dict(dict(config['train'], task_kind=config['task'], seed=seed))

    def with_seed(self, seed):
        return replace(self, seed=seed)


COUNT_PRESET = TrainConfig(
    task_kind=TaskKind.COUNT, max_train_length=30, steps=10000, batch_size=128, context_length=256,
    peak_lr=1e-3, weight_decay=0.1, eval_lengths=[30, 60])

ADDITION_PRESET = TrainConfig(
    task_kind=TaskKind.ADDITION, max_train_length=35, steps=30000, batch_size=64, context_length=512,
    peak_lr=1e-4, weight_decay=0.0, eval_lengths=[35, 40])

DESK_COUNT_PRESET = TrainConfig(
    task_kind=TaskKind.COUNT, max_train_length=10, steps=2000, batch_size=64, context_length=64,
    peak_lr=1e-3, weight_decay=0.1, eval_lengths=[10, 20], eval_items=64)

DESK_ADDITION_PRESET = TrainConfig(
    task_kind=TaskKind.ADDITION, max_train_length=6, steps=3000, batch_size=32, context_length=128,
    peak_lr=1e-3, weight_decay=0.0, eval_lengths=[6, 8], eval_items=64)

PRESETS = {
    'count': COUNT_PRESET,
    'addition': ADDITION_PRESET,
    'desk_count': DESK_COUNT_PRESET,
    'desk_addition': DESK_ADDITION_PRESET,
}
