# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from dataclasses import dataclass, field
from typing import List

import numpy as np

from model import forward
from model.transformer import log_softmax

log = logging.getLogger(__name__)


PROB_FLOOR = 1e-30
LOG_PROB_FLOOR = np.log(PROB_FLOOR)


class MetricError(ValueError):
    pass


@dataclass
class TokenLossProfile:
    """
    Teacher-forced per-token losses and probabilities, one vector per
    example over its scored positions. loss == -log(prob) everywhere.
    """
    losses: List[np.ndarray] = field(default_factory=list)
    probs: List[np.ndarray] = field(default_factory=list)

    def __len__(self):
        return len(self.losses)

    @classmethod
    def from_probs(cls, probs):
        probs = [np.maximum(np.asarray(p, dtype=np.float64), PROB_FLOOR) for p in probs]
        return cls(losses=[-np.log(p) for p in probs], probs=probs)

    @classmethod
    def from_losses(cls, losses):
        losses = [np.minimum(np.asarray(l, dtype=np.float64), -LOG_PROB_FLOOR) for l in losses]
        return cls(losses=losses, probs=[np.exp(-l) for l in losses])

    def validate(self):
        if not self.losses:
            raise MetricError("empty profile")
        for i, losses in enumerate(self.losses):
            if losses.size == 0:
                raise MetricError("example {} has no scored positions".format(i))


def scored_start(example, answer_only=False):
    """ First scored position: the second token, or the first answer token. """
    return max(example.answer_start, 1) if answer_only else 1


def token_profile(params, examples, answer_only=False, batch_size=64):
    """
    Score every example with teacher forcing: position i is scored with the
    probability of token i given tokens 0..i-1. Examples are right-padded
    into batches; causal attention keeps padding out of scored positions.
    """
    if not examples:
        raise MetricError("no examples to profile")

    profile = TokenLossProfile()
    for offset in range(0, len(examples), batch_size):
        chunk = examples[offset:offset + batch_size]
        width = max(len(e) for e in chunk)
        tokens = np.zeros((len(chunk), width), dtype=np.int64)
        for row, example in enumerate(chunk):
            tokens[row, :len(example)] = example.tokens

        logits, _, _ = forward(params, tokens, keep_trace=False)
        logp = log_softmax(logits[:, :-1].astype(np.float64))
        target_logp = np.take_along_axis(logp, tokens[:, 1:, None], axis=-1)[..., 0]
        target_logp = np.maximum(target_logp, LOG_PROB_FLOOR)

        for row, example in enumerate(chunk):
            # logits at i - 1 predict token i
            row_logp = target_logp[row, scored_start(example, answer_only) - 1:len(example) - 1]
            profile.losses.append(-row_logp)
            profile.probs.append(np.exp(row_logp))

    return profile
