# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from taskgen.examples import gen_example
from taskgen.vocab import TaskKind, vocab_for

log = logging.getLogger(__name__)


class PackingError(ValueError):
    pass


@dataclass
class PackedBatch:
    """
    token_matrix and loss_mask have shape (batch, context_length).
    loss_mask[r, t] marks positions whose next token (t + 1) belongs to a
    packed example; boundaries[r] lists (start, answer_start, end) spans,
    end exclusive and covering the trailing separator.
    """
    token_matrix: np.ndarray
    loss_mask: np.ndarray
    boundaries: List[List[Tuple[int, int, int]]] = field(default_factory=list)

    @property
    def batch_size(self):
        return self.token_matrix.shape[0]

    @property
    def context_length(self):
        return self.token_matrix.shape[1]


def max_example_length(task_kind, max_len):
    """ Longest packed span (separator included) for a logical length of at most max_len. """
    if task_kind == TaskKind.COUNT:
        # a , b > , then n numbers with n-1 commas, then the separator
        return 5 + (2 * max_len - 1) + 1
    TaskKind.validate(task_kind)
    # 2n hint/digit elements per operand, '+', '>', n+1 answer pairs
    elements = 2 * max_len + 1 + 2 * max_len + 1 + 2 * (max_len + 1)
    return 2 * elements - 1 + 1


def pack_context(rng, task_kind, length_range, context_length, max_eval_digits=None):
    """
    Fill one context greedily with freshly sampled examples, each followed
    by the separator, stopping at the first example that would overflow.
    Returns (tokens, loss_mask, boundaries) for a single row.
    """
    min_len, max_len = length_range
    longest = max_example_length(task_kind, max_len)
    if longest > context_length:
        raise PackingError("context_length {} cannot hold a {} example of length {} ({} tokens)".format(
            context_length, task_kind, max_len, longest))

    vocab = vocab_for(task_kind, max_eval_digits or max_len)
    tokens = np.full(context_length, vocab.pad_id, dtype=np.int64)
    boundaries = []
    used = 0
    while True:
        example = gen_example(rng, task_kind, min_len, max_len, max_eval_digits)
        span = len(example) + 1
        if used + span > context_length:
            break
        tokens[used:used + len(example)] = example.tokens
        tokens[used + len(example)] = vocab.sep_id
        boundaries.append((used, used + example.answer_start, used + span))
        used += span

    loss_mask = np.zeros(context_length, dtype=bool)
    loss_mask[:max(used - 1, 0)] = True
    return tokens, loss_mask, boundaries


def pack_batch(rng, task_kind, length_range, context_length, batch_size, max_eval_digits=None):
    if batch_size < 1:
        raise PackingError("batch_size must be positive")

    token_matrix = np.empty((batch_size, context_length), dtype=np.int64)
    loss_mask = np.empty((batch_size, context_length), dtype=bool)
    boundaries = []
    for row in range(batch_size):
        token_matrix[row], loss_mask[row], spans = pack_context(
            rng, task_kind, length_range, context_length, max_eval_digits)
        boundaries.append(spans)

    return PackedBatch(token_matrix=token_matrix, loss_mask=loss_mask, boundaries=boundaries)
