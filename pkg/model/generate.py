# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging

import numpy as np

from model.errors import ModelError
from model.transformer import forward

log = logging.getLogger(__name__)


def generate_greedy(params, prompt_tokens, max_new, stop_token=None):
    """
    Argmax decoding from one prompt (a token sequence) or several prompts of
    equal length (a 2-d array). A row stops after emitting stop_token, which
    is kept in its continuation. Returns a list of ints for a single prompt
    and a list of lists otherwise.

    There is no key/value cache: every new token reruns the full forward
    pass over the whole prefix of the rows still decoding, so a step costs
    as much as scoring the prefix from scratch. Long eval sets pay for
    this quadratically in the answer length.
    """
    prompts = np.asarray(prompt_tokens, dtype=np.int64)
    single = prompts.ndim == 1
    if single:
        prompts = prompts[None, :]
    if prompts.ndim != 2 or prompts.shape[1] == 0:
        raise ModelError("prompts must be a non-empty sequence or a 2-d array of equal-length sequences")
    if max_new < 0:
        raise ModelError("max_new must be non-negative")
    if prompts.shape[1] + max_new > params.config.context_length:
        raise ModelError("prompt of {} plus {} new tokens overflows context_length {}".format(
            prompts.shape[1], max_new, params.config.context_length))

    rows = prompts.shape[0]
    continuations = [[] for _ in range(rows)]
    active = np.ones(rows, dtype=bool)
    tokens = prompts
    for _ in range(max_new):
        if not active.any():
            break
        live = np.flatnonzero(active)
        logits, _, _ = forward(params, tokens[live], keep_trace=False)
        # lowest id wins ties
        next_tokens = logits[:, -1].argmax(axis=-1)

        column = np.zeros((rows, 1), dtype=np.int64)
        column[live, 0] = next_tokens
        tokens = np.concatenate([tokens, column], axis=1)
        for row, token in zip(live, next_tokens):
            continuations[row].append(int(token))
            if stop_token is not None and token == stop_token:
                active[row] = False

    return continuations[0] if single else continuations
