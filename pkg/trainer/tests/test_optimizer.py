# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from dataclasses import replace

import numpy as np
import pytest

from model import ModelConfig, init_params
from trainer import COUNT_PRESET, MomentState, optimizer_step


@pytest.fixture
def params():
    config = ModelConfig(depth=1, n_heads=1, vocab_size=7, context_length=8, head_dim=4, dtype='float64')
    return init_params(config, 0)


def test_zero_gradient_is_a_fixed_point(params):
    before = params.copy()
    config = replace(COUNT_PRESET, weight_decay=0.0)
    state = MomentState.zeros(params)
    for step in range(3):
        optimizer_step(params, params.zeros_like(), state, step, config)
    assert params.checksum() == before.checksum()


def test_first_step_closed_form(params):
    before = params.copy()
    config = replace(COUNT_PRESET, weight_decay=0.0)
    grads = params.zeros_like()
    rng = np.random.default_rng(1)
    for name in grads:
        grads[name] = rng.standard_normal(grads[name].shape)

    optimizer_step(params, grads, MomentState.zeros(params), 0, config)
    for name, g in grads.items():
        expected = before[name] - 1e-3 * g / (np.abs(g) + 1e-8)
        assert np.allclose(params[name], expected, rtol=1e-12, atol=1e-15)


def test_decoupled_weight_decay(params):
    before = params.copy()
    state = MomentState.zeros(params)
    optimizer_step(params, params.zeros_like(), state, 0, COUNT_PRESET, lr=0.01)
    for name in params:
        if name == 'embed' or name.endswith('.gain'):
            assert np.array_equal(params[name], before[name])
        else:
            assert np.allclose(params[name], before[name] * (1 - 0.01 * 0.1), rtol=1e-14)


def test_moments_accumulate(params):
    grads = params.zeros_like()
    grads['unembed'][:] = 2.0
    state = MomentState.zeros(params)
    config = replace(COUNT_PRESET, weight_decay=0.0)
    optimizer_step(params, grads, state, 0, config)
    optimizer_step(params, grads, state, 1, config)
    assert np.allclose(state.m['unembed'], 2.0 * (1 - 0.9 ** 2))
    assert np.allclose(state.v['unembed'], 4.0 * (1 - 0.999 ** 2))


def test_shape_mismatch(params):
    grads = params.zeros_like()
    grads['unembed'] = np.zeros((2, 2))
    with pytest.raises(ValueError):
        optimizer_step(params, grads, MomentState.zeros(params), 0, COUNT_PRESET)
