# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from dataclasses import dataclass
from typing import Tuple

from taskgen.vocab import (
    COMMA, GT, PLUS, SEP, DIGITS, TaskKind,
    addition_vocab, count_vocab, hint_index, hint_symbol, is_hint,
)

log = logging.getLogger(__name__)


class TaskRangeError(ValueError):
    pass


@dataclass(frozen=True)
class Example:
    """
    One task instance. tokens hold the prompt followed by the answer, with
    no separator; answer_start is the index of the first answer token.
    """
    tokens: Tuple[int, ...]
    answer_start: int
    task_kind: str
    logical_length: int

    def __len__(self):
        return len(self.tokens)

    @property
    def prompt(self):
        return self.tokens[:self.answer_start]

    @property
    def answer(self):
        return self.tokens[self.answer_start:]


def _comma_joined(elements):
    symbols = []
    for element in elements:
        if symbols:
            symbols.append(COMMA)
        symbols.append(element)
    return symbols


def count_example(start, end, vocab=None):
    """ The example "start, end >, start, ..., end". """
    vocab = vocab or count_vocab()
    if start < 0 or end < start or end > vocab.numeric_max:
        raise TaskRangeError("invalid count window [{}, {}]".format(start, end))

    prompt = [str(start), COMMA, str(end), GT, COMMA]
    answer = _comma_joined([str(n) for n in range(start, end + 1)])
    return Example(
        tokens=tuple(vocab.encode(prompt + answer)),
        answer_start=len(prompt),
        task_kind=TaskKind.COUNT,
        logical_length=end - start + 1,
    )


def gen_count_example(rng, min_len, max_len, vocab_numeric_max=None):
    vocab = count_vocab()
    numeric_max = vocab.numeric_max if vocab_numeric_max is None else vocab_numeric_max
    if numeric_max > vocab.numeric_max:
        raise TaskRangeError("numeric max {} exceeds the vocabulary ({})".format(numeric_max, vocab.numeric_max))
    if min_len < 1 or max_len < min_len:
        raise TaskRangeError("invalid count length range [{}, {}]".format(min_len, max_len))
    if max_len > numeric_max + 1:
        raise TaskRangeError("count length {} exceeds the numeric range 0..{}".format(max_len, numeric_max))

    length = int(rng.integers(min_len, max_len + 1))
    start = int(rng.integers(0, numeric_max - length + 2))
    return count_example(start, start + length - 1, vocab)


def _operand_elements(digits, hint_start):
    elements = []
    for i, digit in enumerate(digits):
        elements.append(hint_symbol(hint_start + i))
        elements.append(str(digit))
    return elements


def addition_example(a_digits, b_digits, hint_start, max_eval_digits):
    """
    Build an addition example from most-significant-first digit lists of
    equal width. The answer lists hint/digit pairs least significant first,
    with the carry digit last under hint a{hint_start + width}.
    """
    width = len(a_digits)
    if width < 1 or len(b_digits) != width:
        raise TaskRangeError("operands must have the same positive width")
    if width > max_eval_digits:
        raise TaskRangeError("{} digits exceed max_eval_digits {}".format(width, max_eval_digits))
    if hint_start < 0 or hint_start + width > max_eval_digits:
        raise TaskRangeError("hint offset {} out of range for {} digits".format(hint_start, width))

    vocab = addition_vocab(max_eval_digits)
    total = _digits_value(a_digits) + _digits_value(b_digits)
    sum_digits = [int(c) for c in reversed(str(total))]
    sum_digits += [0] * (width - len(sum_digits))

    answer = []
    for i, digit in enumerate(sum_digits):
        # digit i from the right lines up with operand position width-1-i;
        # the carry (i == width) takes the next hint along
        position = width - 1 - i if i < width else width
        answer.append(hint_symbol(hint_start + position))
        answer.append(str(digit))

    prompt = _operand_elements(a_digits, hint_start) + [PLUS] + _operand_elements(b_digits, hint_start) + [GT]
    prompt_symbols = _comma_joined(prompt) + [COMMA]
    return Example(
        tokens=tuple(vocab.encode(prompt_symbols + _comma_joined(answer))),
        answer_start=len(prompt_symbols),
        task_kind=TaskKind.ADDITION,
        logical_length=width,
    )


def gen_addition_example(rng, num_digits, max_eval_digits):
    if num_digits < 1 or num_digits > max_eval_digits:
        raise TaskRangeError("num_digits {} out of range [1, {}]".format(num_digits, max_eval_digits))

    a_digits = [int(d) for d in rng.integers(0, 10, size=num_digits)]
    b_digits = [int(d) for d in rng.integers(0, 10, size=num_digits)]
    hint_start = int(rng.integers(0, max_eval_digits - num_digits + 1))
    return addition_example(a_digits, b_digits, hint_start, max_eval_digits)


def gen_example(rng, task_kind, min_len, max_len, max_eval_digits=None):
    """ Sample one training example with a logical length uniform in [min_len, max_len]. """
    if task_kind == TaskKind.COUNT:
        return gen_count_example(rng, min_len, max_len)

    TaskKind.validate(task_kind)
    if min_len < 1 or max_len < min_len:
        raise TaskRangeError("invalid addition length range [{}, {}]".format(min_len, max_len))
    max_eval_digits = max_eval_digits or max_len
    return gen_addition_example(rng, int(rng.integers(min_len, max_len + 1)), max_eval_digits)


def _digits_value(digits):
    value = 0
    for d in digits:
        value = value * 10 + int(d)
    return value


def _strip_commas(symbols):
    return [s for s in symbols if s != COMMA]


def _pairs(elements):
    """ Hint/digit pairs as (hint index, digit). """
    if len(elements) % 2:
        raise ValueError("dangling hint/digit element")
    pairs = []
    for hint, digit in zip(elements[::2], elements[1::2]):
        if not is_hint(hint) or digit not in DIGITS:
            raise ValueError("malformed hint/digit pair: {} {}".format(hint, digit))
        pairs.append((hint_index(hint), int(digit)))
    return pairs


def decode_answer(vocab, task_kind, answer_ids):
    """
    Decode answer tokens (separator and anything after it ignored).
    Count answers decode to a list of ints, addition answers to the int
    they spell. Raises ValueError on malformed answers.
    """
    symbols = vocab.decode(answer_ids)
    if SEP in symbols:
        symbols = symbols[:symbols.index(SEP)]
    elements = _strip_commas(symbols)

    if task_kind == TaskKind.COUNT:
        try:
            return [int(e) for e in elements]
        except ValueError:
            raise ValueError("non-numeric count answer: {}".format(elements))

    pairs = _pairs(elements)
    # least significant first
    return sum(digit * 10 ** i for i, (_, digit) in enumerate(pairs))


def oracle_check(vocab, example):
    """ True when the example's answer is the correct completion of its prompt. """
    prompt = _strip_commas(vocab.decode(example.prompt))
    try:
        answer = decode_answer(vocab, example.task_kind, example.answer)
    except ValueError:
        return False

    if example.task_kind == TaskKind.COUNT:
        if len(prompt) != 3 or prompt[2] != GT:
            return False
        start, end = int(prompt[0]), int(prompt[1])
        return answer == list(range(start, end + 1)) and example.logical_length == end - start + 1

    try:
        plus = prompt.index(PLUS)
        a_pairs = _pairs(prompt[:plus])
        b_pairs = _pairs(prompt[plus + 1:-1])
        answer_pairs = _pairs(_strip_commas(vocab.decode(example.answer)))
    except ValueError:
        return False
    if [h for h, _ in a_pairs] != [h for h, _ in b_pairs]:
        return False

    a = _digits_value([d for _, d in a_pairs])
    b = _digits_value([d for _, d in b_pairs])
    hints = [h for h, _ in a_pairs]
    expected_hints = list(reversed(hints))
    if len(answer_pairs) > len(hints):
        expected_hints.append(hints[-1] + 1)
    return answer == a + b and [h for h, _ in answer_pairs] == expected_hints
