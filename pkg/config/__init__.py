# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .config import Config, ConfigError
from config import default


config = Config()
default.init(config)


def new_config():
    """ A fresh Config with every default bound, for loading several files. """
    conf = Config()
    default.init(conf)
    return conf


__all__ = ['Config', 'ConfigError', 'config', 'default', 'new_config']
