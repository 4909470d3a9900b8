# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np

from model.config import ROPE_BASE
from model.errors import ModelError


def rope_angles(positions, head_dim, base=ROPE_BASE):
    """ (len(positions), head_dim // 2) angles pos * base^(-2j / head_dim). """
    if head_dim % 2:
        raise ModelError("rotary embeddings need an even head_dim, got {}".format(head_dim))
    inv_freq = base ** (-np.arange(0, head_dim, 2, dtype=np.float64) / head_dim)
    return np.outer(np.asarray(positions, dtype=np.float64), inv_freq)


def rope_rotate(x, positions, base=ROPE_BASE, inverse=False):
    """
    Rotate interleaved pairs (x[2j], x[2j+1]) of the last axis by the angle
    of their position. x is (..., seq, head_dim). inverse=True applies the
    transpose rotation, which is also the backward pass.
    """
    head_dim = x.shape[-1]
    angles = rope_angles(positions, head_dim, base)
    if angles.shape[0] != x.shape[-2]:
        raise ModelError("{} positions for a sequence of {}".format(angles.shape[0], x.shape[-2]))

    cos = np.cos(angles).astype(x.dtype)
    sin = np.sin(angles).astype(x.dtype)
    if inverse:
        sin = -sin

    even = x[..., 0::2]
    odd = x[..., 1::2]
    out = np.empty_like(x)
    out[..., 0::2] = even * cos - odd * sin
    out[..., 1::2] = even * sin + odd * cos
    return out
