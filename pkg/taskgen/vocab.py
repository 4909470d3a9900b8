# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from functools import lru_cache

log = logging.getLogger(__name__)


COMMA = ','
GT = '>'
PLUS = '+'
SEP = ';'
PAD = '<pad>'

COUNT_VOCAB_SIZE = 150
DIGITS = [str(d) for d in range(10)]


class TaskKind(object):

    COUNT = 'count'
    ADDITION = 'addition'

    ALL = (COUNT, ADDITION)

    @classmethod
    def validate(cls, task_kind):
        if task_kind not in cls.ALL:
            raise ValueError("unknown task kind: {} (expected one of {})".format(task_kind, ', '.join(cls.ALL)))
        return task_kind


class Vocab(object):
    """ A bijection between surface symbols and integer token ids. """

    def __init__(self, symbols):
        self.symbols = list(symbols)
        self.token_map = {s: i for i, s in enumerate(self.symbols)}
        if len(self.token_map) != len(self.symbols):
            raise ValueError("vocabulary symbols must be unique")

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self.token_map

    @property
    def size(self):
        return len(self.symbols)

    @property
    def pad_id(self):
        return self.token_map[PAD]

    @property
    def sep_id(self):
        return self.token_map[SEP]

    def id(self, symbol):
        try:
            return self.token_map[symbol]
        except KeyError:
            raise KeyError("symbol not in vocabulary: {!r}".format(symbol))

    def encode(self, symbols):
        return [self.id(s) for s in symbols]

    def decode(self, ids):
        try:
            return [self.symbols[int(i)] for i in ids]
        except IndexError:
            raise KeyError("token id out of range for a vocabulary of {}".format(self.size))

    def render(self, ids):
        """ Render ids in the comma-separated surface form, e.g. "5, 9 >, 5, 6". """
        out = []
        for symbol in self.decode(ids):
            if symbol == COMMA:
                out.append(COMMA)
            else:
                if out:
                    out.append(' ')
                out.append(symbol)
        return ''.join(out)

    def parse(self, line):
        """ Inverse of render(). """
        symbols = []
        for piece in line.split():
            if piece != COMMA and piece.endswith(COMMA):
                symbols.append(piece[:-1])
                symbols.append(COMMA)
            else:
                symbols.append(piece)
        return self.encode(symbols)


class CountVocab(Vocab):

    def __init__(self, size=COUNT_VOCAB_SIZE):
        specials = [COMMA, GT, SEP, PAD]
        if size <= len(specials):
            raise ValueError("count vocabulary too small: {}".format(size))
        self.numeric_max = size - len(specials) - 1
        numbers = [str(n) for n in range(self.numeric_max + 1)]
        super(CountVocab, self).__init__(numbers + specials)


class AdditionVocab(Vocab):

    def __init__(self, max_eval_digits):
        if max_eval_digits < 1:
            raise ValueError("max_eval_digits must be positive")
        self.max_eval_digits = max_eval_digits
        # one extra hint for the carry digit of the longest sum
        hints = [hint_symbol(i) for i in range(max_eval_digits + 1)]
        super(AdditionVocab, self).__init__(DIGITS + hints + [PLUS, GT, COMMA, SEP, PAD])


def hint_symbol(index):
    return 'a{}'.format(index)


def is_hint(symbol):
    return len(symbol) > 1 and symbol[0] == 'a' and symbol[1:].isdigit()


def hint_index(symbol):
    return int(symbol[1:])


@lru_cache(maxsize=None)
def count_vocab(size=COUNT_VOCAB_SIZE):
    return CountVocab(size)


@lru_cache(maxsize=None)
def addition_vocab(max_eval_digits):
    return AdditionVocab(max_eval_digits)


def vocab_for(task_kind, max_eval_digits=None):
    TaskKind.validate(task_kind)
    if task_kind == TaskKind.COUNT:
        return count_vocab()
    if max_eval_digits is None:
        raise ValueError("the addition vocabulary needs max_eval_digits")
    return addition_vocab(max_eval_digits)
