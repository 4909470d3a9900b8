# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import math

import pytest

from trainer import COUNT_PRESET, lr_at


def test_endpoints():
    assert lr_at(0, COUNT_PRESET) == 1e-3
    assert lr_at(5000, COUNT_PRESET) == pytest.approx(5e-4, rel=1e-12)
    assert lr_at(9999, COUNT_PRESET) == pytest.approx(1e-3 * 0.5 * (1 + math.cos(math.pi * 9999 / 10000)))


def test_strictly_decreasing():
    values = [lr_at(step, COUNT_PRESET) for step in range(0, 10000, 37)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_out_of_range():
    with pytest.raises(ValueError):
        lr_at(-1, COUNT_PRESET)
    with pytest.raises(ValueError):
        lr_at(10000, COUNT_PRESET)
