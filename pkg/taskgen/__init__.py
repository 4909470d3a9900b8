# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .vocab import TaskKind, Vocab, addition_vocab, count_vocab, vocab_for
from .examples import (
    Example, TaskRangeError, addition_example, count_example,
    decode_answer, gen_addition_example, gen_count_example, gen_example, oracle_check,
)
from .packing import PackedBatch, PackingError, max_example_length, pack_batch, pack_context
from .evalset import CountEvalMode, build_eval_set


__all__ = [
    'TaskKind', 'Vocab', 'addition_vocab', 'count_vocab', 'vocab_for',
    'Example', 'TaskRangeError', 'addition_example', 'count_example',
    'decode_answer', 'gen_addition_example', 'gen_count_example', 'gen_example', 'oracle_check',
    'PackedBatch', 'PackingError', 'max_example_length', 'pack_batch', 'pack_context',
    'CountEvalMode', 'build_eval_set',
]
