# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from model import ModelConfig, init_params


@pytest.fixture
def tiny_config():
    return ModelConfig(depth=1, n_heads=2, vocab_size=11, context_length=16, head_dim=4, dtype='float64')


@pytest.fixture
def tiny_params(tiny_config):
    return init_params(tiny_config, 0)


@pytest.fixture
def tokens():
    return np.random.default_rng(5).integers(0, 11, size=(3, 10))
