# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional


RECORD_FORMAT_VERSION = 1


class RunStatus(object):

    DONE = 'done'
    FAILED = 'failed'

    ALL = (DONE, FAILED)


@dataclass
class RunRecord:
    """
    Outcome of one training run. metrics maps a metric name to
    {eval_length: value}; model_config and train_config are plain dicts so
    the record alone reconstructs the run.
    """
    task_kind: str
    seed: int
    model_config: Dict
    train_config: Dict
    scale_label: str
    param_count: Optional[int]
    status: str = RunStatus.DONE
    error: Optional[str] = None
    architecture: Dict = field(default_factory=dict)
    metrics: Dict[str, Dict[int, float]] = field(default_factory=dict)
    final_train_loss: Optional[float] = None
    train_loss_trace: List[List[float]] = field(default_factory=list)
    eval_trace: List[Dict] = field(default_factory=list)
    wall_time: float = 0.0
    format_version: int = RECORD_FORMAT_VERSION

    @property
    def ok(self):
        return self.status == RunStatus.DONE

    def metric(self, name, eval_length=None):
        """ One metric value; final_train_loss ignores eval_length. """
        if name == 'final_train_loss':
            return self.final_train_loss
        return self.metrics.get(name, {}).get(eval_length)

    def by_length(self, name):
        return dict(self.metrics.get(name, {}))

    @property
    def em_by_length(self):
        return self.by_length('em')

    @property
    def continuous_error_by_length(self):
        return self.by_length('continuous_error')

    @property
    def minprob_by_length(self):
        return self.by_length('minprob')

    @property
    def mean_nll_by_length(self):
        return self.by_length('mean_nll')

    def as_dict(self):
        return asdict(self)
