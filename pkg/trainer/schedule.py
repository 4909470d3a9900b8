# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import math


def lr_at(step, config):
    """ Cosine decay from peak_lr with no warmup: peak * (1 + cos(pi * step / steps)) / 2. """
    if step < 0 or step >= config.steps:
        raise ValueError("step {} outside [0, {})".format(step, config.steps))
    return config.peak_lr * 0.5 * (1.0 + math.cos(math.pi * step / config.steps))
