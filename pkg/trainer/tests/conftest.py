# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from dataclasses import replace

import pytest

from model import ModelConfig
from trainer import DESK_COUNT_PRESET


@pytest.fixture
def tiny_model_config():
    return ModelConfig(depth=1, n_heads=2, vocab_size=150, context_length=64, head_dim=8)


@pytest.fixture
def tiny_train_config():
    return replace(DESK_COUNT_PRESET, steps=4, batch_size=2, eval_items=3, log_every=1, seed=3)
