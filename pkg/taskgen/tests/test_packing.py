# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from taskgen import (
    PackingError, TaskKind, addition_vocab, count_vocab, max_example_length,
    oracle_check, pack_batch, pack_context,
)
from taskgen.examples import Example


def _span_example(tokens, span, task_kind, logical_length):
    start, answer_start, end = span
    return Example(tuple(int(t) for t in tokens[start:end - 1]), answer_start - start, task_kind, logical_length)


def test_max_example_length():
    assert max_example_length(TaskKind.COUNT, 30) == 65
    assert max_example_length(TaskKind.ADDITION, 40) == 488
    assert max_example_length(TaskKind.ADDITION, 35) == 428


def test_exact_fit(rng):
    vocab = count_vocab()
    tokens, loss_mask, boundaries = pack_context(rng, TaskKind.COUNT, (10, 10), 25)
    assert boundaries == [(0, 5, 25)]
    assert vocab.pad_id not in tokens
    assert tokens[-1] == vocab.sep_id
    assert loss_mask[:24].all()
    assert not loss_mask[24]


def test_overflow_error(rng):
    with pytest.raises(PackingError):
        pack_context(rng, TaskKind.COUNT, (1, 30), 64)
    with pytest.raises(PackingError):
        pack_batch(rng, TaskKind.COUNT, (1, 5), 64, 0)


def test_batch_layout(rng):
    vocab = count_vocab()
    batch = pack_batch(rng, TaskKind.COUNT, (1, 30), 256, 8)
    assert batch.token_matrix.shape == (8, 256)
    assert batch.loss_mask.shape == (8, 256)
    assert batch.batch_size == 8
    assert batch.context_length == 256

    for row in range(8):
        tokens = batch.token_matrix[row]
        spans = batch.boundaries[row]
        assert spans[0][0] == 0
        for span, following in zip(spans, spans[1:]):
            assert following[0] == span[2]

        for span in spans:
            assert tokens[span[2] - 1] == vocab.sep_id
            # answer is n numbers and n - 1 commas
            n = (span[2] - 1 - span[1] + 1) // 2
            assert oracle_check(vocab, _span_example(tokens, span, TaskKind.COUNT, n))

        used = spans[-1][2]
        assert (tokens[used:] == vocab.pad_id).all()
        assert batch.loss_mask[row, :used - 1].all()
        assert not batch.loss_mask[row, used - 1:].any()


def test_addition_batch(rng):
    vocab = addition_vocab(40)
    batch = pack_batch(rng, TaskKind.ADDITION, (1, 35), 512, 4, max_eval_digits=40)
    for row in range(4):
        tokens = batch.token_matrix[row]
        for span in batch.boundaries[row]:
            prompt = vocab.decode(tokens[span[0]:span[1]])
            width = sum(1 for s in prompt if s.startswith('a')) // 2
            assert 1 <= width <= 35
            assert oracle_check(vocab, _span_example(tokens, span, TaskKind.ADDITION, width))


def test_packing_is_deterministic():
    a = pack_batch(np.random.default_rng(3), TaskKind.COUNT, (1, 30), 128, 2)
    b = pack_batch(np.random.default_rng(3), TaskKind.COUNT, (1, 30), 128, 2)
    assert (a.token_matrix == b.token_matrix).all()
    assert a.boundaries == b.boundaries
