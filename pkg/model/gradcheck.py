# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Dict

import numpy as np

from model.config import ModelConfig
from model.params import init_params
from model.transformer import backward, forward, nll_gradient

log = logging.getLogger(__name__)


GRADCHECK_STEP = 1e-5
GRADCHECK_RTOL = 1e-4
GRADCHECK_ATOL = 1e-8


def gradcheck_config(vocab_size=150, context_length=16):
    return ModelConfig(depth=1, n_heads=2, vocab_size=vocab_size, context_length=context_length,
                       head_dim=4, dtype='float64')


class _Batch(object):
    def __init__(self, token_matrix, loss_mask):
        self.token_matrix = token_matrix
        self.loss_mask = loss_mask


@dataclass
class GradcheckReport:
    errors: Dict[str, float] = field(default_factory=OrderedDict)
    rtol: float = GRADCHECK_RTOL
    atol: float = GRADCHECK_ATOL

    @property
    def passed(self):
        return all(err <= self.rtol for err in self.errors.values())

    @property
    def worst(self):
        return max(self.errors.items(), key=lambda kv: kv[1])


def relative_error(analytic, numeric, atol=GRADCHECK_ATOL):
    """ |a - n| / max(|a|, |n|), counted as zero where |a - n| <= atol. """
    diff = np.abs(analytic - numeric)
    denom = np.maximum(np.abs(analytic), np.abs(numeric))
    with np.errstate(divide='ignore', invalid='ignore'):
        rel = np.where(diff <= atol, 0.0, diff / denom)
    return rel


def random_batch(config, rng, batch_size=2, seq_len=12):
    tokens = rng.integers(0, config.vocab_size, size=(batch_size, seq_len))
    mask = rng.random((batch_size, seq_len)) < 0.7
    mask[0, 0] = True
    return _Batch(tokens, mask)


def gradcheck(config=None, seed=0, batch=None, step=GRADCHECK_STEP, rtol=GRADCHECK_RTOL, atol=GRADCHECK_ATOL):
    """
    Compare analytic gradients of mean_nll against central finite
    differences for every entry of every tensor. Needs a float64 config.
    """
    config = config or gradcheck_config()
    rng = np.random.default_rng(seed)
    params = init_params(config, seed)
    batch = batch or random_batch(config, rng)

    logits, _, trace = forward(params, batch.token_matrix, batch.loss_mask)
    grads = backward(params, trace, nll_gradient(logits, trace.tokens, batch.loss_mask))

    def loss():
        return forward(params, batch.token_matrix, batch.loss_mask, keep_trace=False)[1]

    report = GradcheckReport(rtol=rtol, atol=atol)
    for name, tensor in params.items():
        numeric = np.zeros_like(tensor)
        it = np.nditer(tensor, flags=['multi_index'])
        for _ in it:
            idx = it.multi_index
            original = tensor[idx]
            tensor[idx] = original + step
            plus = loss()
            tensor[idx] = original - step
            minus = loss()
            tensor[idx] = original
            numeric[idx] = (plus - minus) / (2.0 * step)

        report.errors[name] = float(relative_error(grads[name], numeric, atol).max())
        log.debug("gradcheck %s: max relative error %.3e", name, report.errors[name])

    return report
