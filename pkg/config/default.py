# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

# Defaults

DEFAULT_OUTPUT_DIR = './runs'
DEFAULT_LOG_LEVEL = 'info'
DEFAULT_TASK = 'count'
DEFAULT_SWEEP_AXIS = 'fixed_depth_scale_width'
DEFAULT_HEAD_DIM = 64
DEFAULT_MLP_RATIO = 4
DEFAULT_DTYPE = 'float32'
DEFAULT_FIXED_DEPTH = 4
DEFAULT_FIXED_HIDDEN_DIM = 512
DEFAULT_HIDDEN_DIMS = [64, 128, 256, 384, 512, 640, 768, 1024]
DEFAULT_DEPTHS = [1, 2, 4, 6, 8]
DEFAULT_SEEDS = {'start': 0, 'count': 250}
DEFAULT_EVAL_SEED = 1234
DEFAULT_LOGGING_CONFIG = {
    'disable_file_logging': False,
    'distscale_log_file': None,
}

# Full-size count grid; the other grids live in conf.d/
DEFAULT_TRAIN_CONFIG = {
    'max_train_length': 30,
    'steps': 10000,
    'batch_size': 128,
    'context_length': 256,
    'peak_lr': 1e-3,
    'weight_decay': 0.1,
    'eval_lengths': [30, 60],
    'eval_items': 128,
    'eval_seed': DEFAULT_EVAL_SEED,
    'count_eval_mode': 'sampled',
    'answer_only': False,
    'log_every': 50,
    'eval_every': 0,
    'early_stop': False,
    'early_stop_window': 200,
    'checkpoint': False,
}

DEFAULT_ANALYSIS_CONFIG = {
    'metrics': ['em', 'continuous_error', 'minprob', 'final_train_loss'],
    'eval_length': None,
    'threshold': None,
    'bootstrap_resamples': 1000,
    'bootstrap_level': 0.95,
    'bootstrap_seed': 0,
    'kde_bandwidth': None,
    'kde_points': 512,
    'valley_ratio': 0.8,
    'min_peak_fraction': 0.1,
    'top_k': 5,
}


def init(config):
    config_defaults = {
        'task': DEFAULT_TASK,
        'sweep_axis': DEFAULT_SWEEP_AXIS,
        'fixed_depth': DEFAULT_FIXED_DEPTH,
        'fixed_hidden_dim': DEFAULT_FIXED_HIDDEN_DIM,
        'hidden_dims': DEFAULT_HIDDEN_DIMS,
        'depths': DEFAULT_DEPTHS,
        'head_dim': DEFAULT_HEAD_DIM,
        'mlp_ratio': DEFAULT_MLP_RATIO,
        'dtype': DEFAULT_DTYPE,
        'seeds': DEFAULT_SEEDS,
        'train': DEFAULT_TRAIN_CONFIG,
        'analysis': DEFAULT_ANALYSIS_CONFIG,
        'output_dir': DEFAULT_OUTPUT_DIR,
        'max_parallel': None,
        'log_level': DEFAULT_LOG_LEVEL,
        'logging': DEFAULT_LOGGING_CONFIG,
    }

    for k, v in config_defaults.items():
        config.bind_env_and_set_default(k, k, v)
