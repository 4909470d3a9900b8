# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .profile import MetricError, TokenLossProfile, token_profile
from .scores import continuous_error, mean_nll, min_prob
from .evaluation import MetricNames, evaluate, exact_match


__all__ = [
    'MetricError', 'TokenLossProfile', 'token_profile',
    'continuous_error', 'mean_nll', 'min_prob',
    'MetricNames', 'evaluate', 'exact_match',
]
