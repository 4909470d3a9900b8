# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .errors import CheckpointError, ModelError, TrainingDivergence
from .config import ARCHITECTURE, ModelConfig, param_count, scale_label
from .params import Params, init_params, is_decayed, param_shapes
from .rope import rope_rotate
from .transformer import ForwardTrace, backward, forward, loss_and_grad
from .generate import generate_greedy
from .checkpoint import load_checkpoint, save_checkpoint
from .gradcheck import GradcheckReport, gradcheck, gradcheck_config


__all__ = [
    'CheckpointError', 'ModelError', 'TrainingDivergence',
    'ARCHITECTURE', 'ModelConfig', 'param_count', 'scale_label',
    'Params', 'init_params', 'is_decayed', 'param_shapes',
    'rope_rotate',
    'ForwardTrace', 'backward', 'forward', 'loss_and_grad',
    'generate_greedy',
    'load_checkpoint', 'save_checkpoint',
    'GradcheckReport', 'gradcheck', 'gradcheck_config',
]
