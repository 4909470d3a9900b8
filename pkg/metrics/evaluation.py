# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict, defaultdict

import numpy as np

from metrics.profile import MetricError, token_profile
from metrics.scores import continuous_error, mean_nll, min_prob
from model import generate_greedy

log = logging.getLogger(__name__)


class MetricNames(object):

    EM = 'em'
    CONTINUOUS_ERROR = 'continuous_error'
    MINPROB = 'minprob'
    MEAN_NLL = 'mean_nll'
    FINAL_TRAIN_LOSS = 'final_train_loss'

    EVAL = (EM, CONTINUOUS_ERROR, MINPROB, MEAN_NLL)
    # bounded to [0, 1]
    BOUNDED = (EM, MINPROB)
    HIGHER_IS_BETTER = (EM, MINPROB)


def strip_at(tokens, stop_token):
    tokens = list(tokens)
    if stop_token in tokens:
        return tokens[:tokens.index(stop_token)]
    return tokens


def exact_match(params, eval_set, stop_token):
    """
    Fraction of examples whose greedy continuation of the prompt, cut at
    stop_token, equals the answer. Examples with the same prompt length are
    decoded together.
    """
    if not eval_set:
        raise MetricError("empty eval set")

    groups = defaultdict(list)
    for example in eval_set:
        groups[example.answer_start].append(example)

    correct = 0
    for examples in groups.values():
        max_new = max(len(e.answer) for e in examples) + 1
        prompts = np.array([e.prompt for e in examples], dtype=np.int64)
        outputs = generate_greedy(params, prompts, max_new, stop_token=stop_token)
        for example, output in zip(examples, outputs):
            # must stop within the answer length plus the separator
            if stop_token not in output[:len(example.answer) + 1]:
                continue
            if strip_at(output, stop_token) == list(example.answer):
                correct += 1

    return correct / len(eval_set)


def evaluate(params, eval_set, stop_token, answer_only=False):
    """ All evaluation metrics over one eval set, scored on identical positions. """
    profile = token_profile(params, eval_set, answer_only=answer_only)
    results = OrderedDict()
    results[MetricNames.EM] = exact_match(params, eval_set, stop_token)
    results[MetricNames.CONTINUOUS_ERROR] = continuous_error(profile)
    results[MetricNames.MINPROB] = min_prob(profile)
    results[MetricNames.MEAN_NLL] = mean_nll(profile)
    return results
