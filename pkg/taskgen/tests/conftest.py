# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(7)
