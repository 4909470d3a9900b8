# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import os
from dataclasses import dataclass, field, replace
from typing import List, Optional

import psutil

from analysis.population import SweepAxis
from config import ConfigError
from model import ModelConfig, ModelError, param_count, scale_label
from taskgen import vocab_for
from trainer import TrainConfig, TrainConfigError
from utils.hash import hash_mutable

log = logging.getLogger(__name__)


RECORDS_FILE = 'records.jsonl'
MANIFEST_FILE = 'manifest.json'
LOG_FILE = 'sweep.log'
CHECKPOINT_DIR = 'checkpoints'


def cell_id(label, seed):
    return '{}/{}'.format(label, seed)


@dataclass(frozen=True)
class RunSpec:
    """ Everything a worker needs to train and score one (scale, seed) cell. """
    model_config: ModelConfig
    train_config: TrainConfig
    checkpoint_path: Optional[str] = None

    @property
    def scale_label(self):
        return scale_label(self.model_config)

    @property
    def seed(self):
        return self.train_config.seed

    @property
    def cell(self):
        return cell_id(self.scale_label, self.seed)


def seeds_from_config(seeds):
    """ {start, count} or an explicit list. """
    if isinstance(seeds, dict):
        try:
            start, count = int(seeds.get('start', 0)), int(seeds['count'])
        except (KeyError, TypeError, ValueError):
            raise ConfigError("seeds must be {start, count} or a list of integers")
        if start < 0 or count < 1:
            raise ConfigError("seeds need a non-negative start and a positive count")
        return list(range(start, start + count))
    if isinstance(seeds, list) and all(isinstance(s, int) and not isinstance(s, bool) for s in seeds):
        return list(seeds)
    raise ConfigError("seeds must be {start, count} or a list of integers")


def scale_grid(config, axis, vocab_size, context_length):
    """ The ModelConfigs along one sweep axis, smallest first. """
    common = dict(vocab_size=vocab_size, context_length=context_length, head_dim=config['head_dim'],
                  mlp_ratio=config['mlp_ratio'], dtype=config['dtype'])
    try:
        if axis == SweepAxis.FIXED_DEPTH_SCALE_WIDTH:
            return [ModelConfig.from_hidden_dim(config['fixed_depth'], hidden_dim, **common)
                    for hidden_dim in config['hidden_dims']]
        return [ModelConfig.from_hidden_dim(depth, config['fixed_hidden_dim'], **common)
                for depth in config['depths']]
    except ModelError as e:
        raise ConfigError("invalid scale grid: {}".format(e))


@dataclass
class SweepConfig:
    task_kind: str
    sweep_axis: str
    scale_points: List[ModelConfig]
    seeds: List[int]
    train: TrainConfig
    output_dir: str
    max_parallel: int = 1
    paths: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.validate()
        self.paths = {
            'records': os.path.join(self.output_dir, RECORDS_FILE),
            'manifest': os.path.join(self.output_dir, MANIFEST_FILE),
            'log': os.path.join(self.output_dir, LOG_FILE),
            'checkpoints': os.path.join(self.output_dir, CHECKPOINT_DIR),
        }

    def validate(self):
        if self.sweep_axis not in SweepAxis.ALL:
            raise ConfigError("unknown sweep_axis: {}".format(self.sweep_axis))
        if not self.scale_points:
            raise ConfigError("the sweep has no scale points")
        counts = [param_count(c) for c in self.scale_points]
        if any(a >= b for a, b in zip(counts, counts[1:])):
            raise ConfigError("scale points must strictly increase in parameter count: {}".format(
                ', '.join(scale_label(c) for c in self.scale_points)))
        if not self.seeds:
            raise ConfigError("the sweep has no seeds")
        if len(set(self.seeds)) != len(self.seeds):
            raise ConfigError("seeds must be unique")
        if self.max_parallel < 1:
            raise ConfigError("max_parallel must be at least 1")

    @classmethod
    def from_config(cls, config, seeds=None, output_dir=None, max_parallel=None, eval_every=None):
        """
        Build from a loaded Config. Keyword arguments override the file, as
        the command line flags do.
        """
        try:
            train = TrainConfig.from_config(config)
            if eval_every is not None:
                train = replace(train, eval_every=eval_every)
        except TrainConfigError as e:
            raise ConfigError(str(e))

        vocab = vocab_for(train.task_kind, train.max_eval_digits)
        axis = config['sweep_axis']
        if axis not in SweepAxis.ALL:
            raise ConfigError("unknown sweep_axis: {}".format(axis))

        if max_parallel is None:
            max_parallel = config.get('max_parallel') or psutil.cpu_count(logical=True) or 1

        return cls(
            task_kind=train.task_kind,
            sweep_axis=axis,
            scale_points=scale_grid(config, axis, vocab.size, train.context_length),
            seeds=seeds if seeds is not None else seeds_from_config(config['seeds']),
            train=train,
            output_dir=output_dir or config['output_dir'],
            max_parallel=int(max_parallel),
        )

    def config_hash(self):
        """ Fingerprint of what shapes a run; seeds, parallelism and output dir are left out. """
        train = self.train.as_dict()
        train.pop('seed')
        return hash_mutable({
            'task_kind': self.task_kind,
            'sweep_axis': self.sweep_axis,
            'scale_points': [c.as_dict() for c in self.scale_points],
            'train': train,
        })

    def run_specs(self):
        specs = []
        for model_config in self.scale_points:
            for seed in self.seeds:
                checkpoint_path = None
                if self.train.checkpoint:
                    checkpoint_path = os.path.join(self.paths['checkpoints'], '{}-seed{}.dsck'.format(
                        scale_label(model_config), seed))
                specs.append(RunSpec(model_config, self.train.with_seed(seed), checkpoint_path))
        return specs

    def cells(self):
        return [spec.cell for spec in self.run_specs()]
