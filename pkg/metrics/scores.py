# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np


def continuous_error(profile):
    """ Mean over examples of the largest per-token loss. """
    profile.validate()
    return float(np.mean([losses.max() for losses in profile.losses]))


def min_prob(profile):
    """ Mean over examples of the smallest per-token probability. """
    profile.validate()
    return float(np.mean([probs.min() for probs in profile.probs]))


def mean_nll(profile):
    """ Mean per-token loss pooled over every scored position. """
    profile.validate()
    return float(np.concatenate(profile.losses).mean())
