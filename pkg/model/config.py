# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from dataclasses import asdict, dataclass

from model.errors import ModelError

log = logging.getLogger(__name__)


DEFAULT_HEAD_DIM = 64
DEFAULT_MLP_RATIO = 4
ROPE_BASE = 10000.0
LAYER_NORM_EPS = 1e-5
SUPPORTED_DTYPES = ('float32', 'float64')

# recorded next to every run so results describe the network they came from
ARCHITECTURE = {
    'norm': 'pre',
    'norm_bias': False,
    'linear_bias': False,
    'activation': 'gelu_tanh',
    'tied_embeddings': False,
    'rope_base': ROPE_BASE,
    'dropout': 0.0,
}


@dataclass(frozen=True)
class ModelConfig:
    depth: int
    n_heads: int
    vocab_size: int
    context_length: int
    head_dim: int = DEFAULT_HEAD_DIM
    mlp_ratio: int = DEFAULT_MLP_RATIO
    dtype: str = 'float32'

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_hidden_dim(cls, depth, hidden_dim, vocab_size, context_length, head_dim=DEFAULT_HEAD_DIM, **kwargs):
        if hidden_dim <= 0 or hidden_dim % head_dim:
            raise ModelError("hidden_dim {} is not a multiple of head_dim {}".format(hidden_dim, head_dim))
        return cls(depth=depth, n_heads=hidden_dim // head_dim, vocab_size=vocab_size,
                   context_length=context_length, head_dim=head_dim, **kwargs)

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(**data)
        except TypeError as e:
            raise ModelError("invalid model config: {}".format(e))

    @property
    def hidden_dim(self):
        return self.n_heads * self.head_dim

    @property
    def mlp_dim(self):
        return self.mlp_ratio * self.hidden_dim

    def validate(self):
        for name in ('depth', 'n_heads', 'vocab_size', 'context_length', 'head_dim', 'mlp_ratio'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ModelError("{} must be a positive integer, got {!r}".format(name, value))
        if self.head_dim % 2:
            raise ModelError("head_dim must be even for rotary embeddings, got {}".format(self.head_dim))
        if self.dtype not in SUPPORTED_DTYPES:
            raise ModelError("unsupported dtype: {}".format(self.dtype))

    def as_dict(self):
        return asdict(self)


def param_count(config):
    d, m, v = config.hidden_dim, config.mlp_dim, config.vocab_size
    per_layer = 2 * d + 4 * d * d + 2 * d * m
    return v * d + config.depth * per_layer + d + d * v


def scale_label(config):
    return 'd{}-w{}'.format(config.depth, config.hidden_dim)
