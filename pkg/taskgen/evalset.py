# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging

from taskgen.examples import TaskRangeError, count_example, gen_addition_example, gen_count_example
from taskgen.vocab import TaskKind, count_vocab

log = logging.getLogger(__name__)


class CountEvalMode(object):

    SAMPLED = 'sampled'
    ALL_WINDOWS = 'all_windows'

    ALL = (SAMPLED, ALL_WINDOWS)


def build_eval_set(task_kind, test_length, n_items, rng, count_mode=CountEvalMode.SAMPLED, max_eval_digits=None):
    """
    Examples of exactly test_length. With count_mode 'all_windows' every
    start value of the count task is enumerated and n_items is ignored.
    """
    TaskKind.validate(task_kind)
    if test_length < 1:
        raise TaskRangeError("test_length must be positive")

    if task_kind == TaskKind.COUNT and count_mode == CountEvalMode.ALL_WINDOWS:
        numeric_max = count_vocab().numeric_max
        if test_length > numeric_max + 1:
            raise TaskRangeError("count length {} exceeds the numeric range 0..{}".format(test_length, numeric_max))
        return [count_example(start, start + test_length - 1) for start in range(numeric_max - test_length + 2)]

    if count_mode not in CountEvalMode.ALL:
        raise ValueError("unknown count eval mode: {}".format(count_mode))
    if n_items < 1:
        raise TaskRangeError("n_items must be positive")

    if task_kind == TaskKind.COUNT:
        return [gen_count_example(rng, test_length, test_length) for _ in range(n_items)]

    max_eval_digits = max_eval_digits or test_length
    return [gen_addition_example(rng, test_length, max_eval_digits) for _ in range(n_items)]
