# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict
from dataclasses import dataclass, field

import numpy as np

from model import is_decayed
from trainer.schedule import lr_at

log = logging.getLogger(__name__)


BETA1 = 0.9
BETA2 = 0.999
EPSILON = 1e-8


@dataclass
class MomentState:
    m: OrderedDict = field(default_factory=OrderedDict)
    v: OrderedDict = field(default_factory=OrderedDict)

    @classmethod
    def zeros(cls, params):
        return cls(m=params.zeros_like(), v=params.zeros_like())


def optimizer_step(params, grads, state, step, config, lr=None):
    """
    One Adam update with bias correction and decoupled weight decay
    (lr * weight_decay * theta) on every tensor except embeddings and norm
    gains. Updates params and state in place and returns both.
    """
    lr = lr_at(step, config) if lr is None else lr
    t = step + 1
    correction1 = 1.0 - BETA1 ** t
    correction2 = 1.0 - BETA2 ** t

    for name, theta in params.items():
        grad = grads[name]
        if grad.shape != theta.shape:
            raise ValueError("gradient for {} has shape {}, expected {}".format(name, grad.shape, theta.shape))

        m = state.m[name]
        v = state.v[name]
        m *= BETA1
        m += (1.0 - BETA1) * grad
        v *= BETA2
        v += (1.0 - BETA2) * grad * grad

        update = (m / correction1) / (np.sqrt(v / correction2) + EPSILON)
        if config.weight_decay and is_decayed(name):
            theta -= lr * config.weight_decay * theta
        theta -= (lr * update).astype(theta.dtype, copy=False)

    return params, state
