# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from model import ModelConfig, init_params
from taskgen import TaskKind, build_eval_set, count_vocab


@pytest.fixture(scope='module')
def count_params():
    config = ModelConfig(depth=1, n_heads=1, vocab_size=150, context_length=256)
    return init_params(config, 0)


@pytest.fixture(scope='module')
def count_eval_set():
    return build_eval_set(TaskKind.COUNT, 8, 6, np.random.default_rng(1234))


@pytest.fixture
def sep_id():
    return count_vocab().sep_id
