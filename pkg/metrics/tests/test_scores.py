# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import numpy as np
import pytest

from metrics import MetricError, TokenLossProfile, continuous_error, mean_nll, min_prob


class TestScores():
    def test_perfect(self):
        profile = TokenLossProfile.from_probs([[1.0, 1.0], [1.0]])
        assert continuous_error(profile) == 0.0
        assert min_prob(profile) == 1.0
        assert mean_nll(profile) == 0.0

    def test_continuous_error_arithmetic(self):
        profile = TokenLossProfile.from_losses([[0.1, 0.5], [0.2, 0.3]])
        assert continuous_error(profile) == pytest.approx(0.4)

    def test_continuous_error_scales_linearly(self):
        losses = [np.random.default_rng(i).random(7) * 3 for i in range(5)]
        base = continuous_error(TokenLossProfile.from_losses(losses))
        scaled = continuous_error(TokenLossProfile.from_losses([l * 0.3 for l in losses]))
        assert scaled == pytest.approx(0.3 * base, rel=1e-12)

    def test_min_prob_arithmetic(self):
        profile = TokenLossProfile.from_probs([[0.9, 0.4], [0.8, 0.6]])
        assert min_prob(profile) == pytest.approx(0.5)

    def test_max_loss_is_log_of_min_prob(self):
        rng = np.random.default_rng(0)
        profile = TokenLossProfile.from_probs([rng.random(rng.integers(1, 9)) for _ in range(20)])
        for losses, probs in zip(profile.losses, profile.probs):
            assert losses.max() == pytest.approx(-np.log(probs.min()), rel=1e-12)

    def test_mean_nll(self):
        profile = TokenLossProfile.from_losses([[1.0, 2.0], [3.0], [0.5, 0.5, 2.0]])
        assert mean_nll(profile) == pytest.approx(9.0 / 6)
        assert mean_nll(profile) <= continuous_error(profile)

    def test_uniform(self):
        v = 150
        profile = TokenLossProfile.from_probs([np.full(4, 1.0 / v), np.full(2, 1.0 / v)])
        assert mean_nll(profile) == pytest.approx(np.log(v))

    def test_probability_floor(self):
        profile = TokenLossProfile.from_probs([[0.0, 0.5]])
        assert np.isfinite(continuous_error(profile))
        assert continuous_error(profile) == pytest.approx(-np.log(1e-30))

    def test_errors(self):
        with pytest.raises(MetricError):
            continuous_error(TokenLossProfile())
        with pytest.raises(MetricError):
            min_prob(TokenLossProfile.from_probs([[0.5], []]))
        with pytest.raises(MetricError):
            mean_nll(TokenLossProfile())


RANDOM_PROFILES = 1000


def _random_profile(rng, index):
    lengths = rng.integers(1, 41, size=rng.integers(1, 9))
    if index % 2:
        return TokenLossProfile.from_losses([rng.exponential(2.0, size=n) for n in lengths])
    return TokenLossProfile.from_probs([rng.uniform(1e-6, 1.0, size=n) for n in lengths])


def test_max_loss_matches_min_prob_on_random_profiles():
    rng = np.random.default_rng(99)
    for index in range(RANDOM_PROFILES):
        profile = _random_profile(rng, index)
        for losses, probs in zip(profile.losses, profile.probs):
            assert abs(losses.max() - (-np.log(probs.min()))) <= 1e-9
        expected = np.mean([-np.log(probs.min()) for probs in profile.probs])
        assert abs(continuous_error(profile) - expected) <= 1e-9
