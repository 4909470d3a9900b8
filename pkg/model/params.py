# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import hashlib
import logging
from collections import OrderedDict

import numpy as np

from model.errors import ModelError

log = logging.getLogger(__name__)


# excluded from weight decay
NO_DECAY_SUFFIXES = ('.gain',)
NO_DECAY_NAMES = ('embed',)


def param_shapes(config):
    """ Tensor names and shapes in the fixed checkpoint order. """
    d, m, v = config.hidden_dim, config.mlp_dim, config.vocab_size
    shapes = OrderedDict()
    shapes['embed'] = (v, d)
    for layer in range(config.depth):
        prefix = 'layers.{}.'.format(layer)
        shapes[prefix + 'ln1.gain'] = (d,)
        for proj in ('wq', 'wk', 'wv', 'wo'):
            shapes[prefix + 'attn.' + proj] = (d, d)
        shapes[prefix + 'ln2.gain'] = (d,)
        shapes[prefix + 'mlp.w_in'] = (d, m)
        shapes[prefix + 'mlp.w_out'] = (m, d)
    shapes['ln_f.gain'] = (d,)
    shapes['unembed'] = (d, v)
    return shapes


def is_decayed(name):
    return name not in NO_DECAY_NAMES and not name.endswith(NO_DECAY_SUFFIXES)


class Params(object):
    """ Named parameter tensors of one model, in param_shapes() order. """

    def __init__(self, config, tensors):
        self.config = config
        self.tensors = OrderedDict(tensors)

        expected = param_shapes(config)
        if list(self.tensors) != list(expected):
            raise ModelError("parameter names do not match the config")
        for name, shape in expected.items():
            if self.tensors[name].shape != shape:
                raise ModelError("{} has shape {}, expected {}".format(name, self.tensors[name].shape, shape))

    def __getitem__(self, name):
        return self.tensors[name]

    def __iter__(self):
        return iter(self.tensors)

    def __len__(self):
        return len(self.tensors)

    def items(self):
        return self.tensors.items()

    @property
    def count(self):
        return sum(t.size for t in self.tensors.values())

    def all_finite(self):
        return all(np.isfinite(t).all() for t in self.tensors.values())

    def copy(self):
        return Params(self.config, OrderedDict((k, v.copy()) for k, v in self.tensors.items()))

    def zeros_like(self):
        return OrderedDict((k, np.zeros_like(v)) for k, v in self.tensors.items())

    def checksum(self):
        digest = hashlib.sha256()
        for name, tensor in self.tensors.items():
            digest.update(name.encode('utf-8'))
            digest.update(np.ascontiguousarray(tensor).tobytes())
        return digest.hexdigest()


def init_params(config, seed):
    """
    Scaled-normal init: projections N(0, 1/hidden_dim), residual output
    projections further scaled by 1/sqrt(2 * depth), embeddings N(0, 1),
    unembedding std 1/hidden_dim so initial predictions are near uniform,
    norm gains at one.
    """
    rng = np.random.default_rng(seed)
    dtype = np.dtype(config.dtype)
    d = config.hidden_dim
    proj_std = d ** -0.5
    residual_std = proj_std / np.sqrt(2.0 * config.depth)

    tensors = OrderedDict()
    for name, shape in param_shapes(config).items():
        if name.endswith('.gain'):
            tensor = np.ones(shape)
        elif name == 'embed':
            tensor = rng.standard_normal(shape)
        elif name == 'unembed':
            tensor = rng.standard_normal(shape) / d
        elif name.endswith(('attn.wo', 'mlp.w_out')):
            tensor = rng.standard_normal(shape) * residual_std
        else:
            tensor = rng.standard_normal(shape) * proj_std
        tensors[name] = tensor.astype(dtype)

    return Params(config, tensors)
