# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.


class ModelError(Exception):
    pass


class CheckpointError(ModelError):
    pass


class TrainingDivergence(ModelError):
    """ Raised when the training loss or its gradients stop being finite. """
    pass
