# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from taskgen import CountEvalMode, TaskKind, TaskRangeError, addition_vocab, build_eval_set, count_vocab, oracle_check


def test_count_sampled(rng):
    items = build_eval_set(TaskKind.COUNT, 60, 32, rng)
    assert len(items) == 32
    assert all(item.logical_length == 60 for item in items)
    assert all(oracle_check(count_vocab(), item) for item in items)


def test_count_all_windows():
    items = build_eval_set(TaskKind.COUNT, 60, 1, None, count_mode=CountEvalMode.ALL_WINDOWS)
    assert len(items) == 145 - 60 + 2
    starts = [count_vocab().decode(item.tokens[:1])[0] for item in items]
    assert starts[0] == '0'
    assert starts[-1] == '86'


def test_addition(rng):
    items = build_eval_set(TaskKind.ADDITION, 40, 16, rng, max_eval_digits=40)
    assert len(items) == 16
    assert all(item.logical_length == 40 for item in items)
    assert all(oracle_check(addition_vocab(40), item) for item in items)


def test_fixed_seed_is_reproducible():
    a = build_eval_set(TaskKind.COUNT, 20, 8, np.random.default_rng(1234))
    b = build_eval_set(TaskKind.COUNT, 20, 8, np.random.default_rng(1234))
    assert a == b


def test_errors(rng):
    with pytest.raises(TaskRangeError):
        build_eval_set(TaskKind.COUNT, 20, 0, rng)
    with pytest.raises(TaskRangeError):
        build_eval_set(TaskKind.COUNT, 147, 4, rng)
    with pytest.raises(ValueError):
        build_eval_set(TaskKind.COUNT, 20, 4, rng, count_mode='bogus')
