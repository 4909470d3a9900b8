# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from model import ModelError, rope_rotate


def test_position_zero_is_identity():
    x = np.random.default_rng(0).standard_normal((2, 1, 8))
    assert np.allclose(rope_rotate(x, [0]), x, atol=0, rtol=0)


def test_pair_norms_preserved():
    rng = np.random.default_rng(1)
    x = rng.standard_normal((3, 2, 17, 16))
    positions = rng.integers(0, 10000, size=17)
    y = rope_rotate(x, positions)
    norms_x = np.hypot(x[..., 0::2], x[..., 1::2])
    norms_y = np.hypot(y[..., 0::2], y[..., 1::2])
    assert np.abs(norms_x - norms_y).max() < 1e-12


def test_matches_rotation_matrix():
    x = np.array([[0.3, -1.2, 0.7, 2.0]])
    y = rope_rotate(x, [1])
    rotation = np.array([[np.cos(1.0), -np.sin(1.0)], [np.sin(1.0), np.cos(1.0)]])
    assert np.allclose(y[0, :2], rotation @ x[0, :2], rtol=0, atol=1e-15)
    # second pair turns by 10000^(-2/4) radians
    angle = 10000 ** -0.5
    rotation = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    assert np.allclose(y[0, 2:], rotation @ x[0, 2:], rtol=0, atol=1e-15)


def test_inverse():
    x = np.random.default_rng(2).standard_normal((5, 6))
    positions = np.arange(5) * 7
    assert np.allclose(rope_rotate(rope_rotate(x, positions), positions, inverse=True), x, atol=1e-12)


def test_errors():
    with pytest.raises(ModelError):
        rope_rotate(np.zeros((2, 5)), [0, 1])
    with pytest.raises(ModelError):
        rope_rotate(np.zeros((2, 4)), [0, 1, 2])
