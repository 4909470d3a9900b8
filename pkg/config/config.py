# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import os
import copy
import yaml
import logging

from utils.util import _is_affirmative


log = logging.getLogger(__name__)


class ConfigError(Exception):
    pass


class Config(object):

    DEFAULT_ENV_PREFIX = "DS_"

    # keys whose value may be a dict or a list, e.g. seeds: {start, count} | [..]
    POLYMORPHIC_KEYS = ('seeds',)

    def __init__(self, env_prefix=DEFAULT_ENV_PREFIX):
        self.env_prefix = env_prefix
        self.env_bindings = {}
        self.data = {}
        self.defaults = {}
        self._loaded_config = None

    def __getitem__(self, key):
        try:
            item = self.data[key]

            if isinstance(item, dict) and key in self.defaults and isinstance(self.defaults[key], dict):
                # merge the section over its defaults
                merge_config = copy.deepcopy(self.defaults[key])
                merge_config.update(item)
                item = merge_config
        except KeyError:
            item = copy.deepcopy(self.defaults[key])

        return item

    def __setitem__(self, key, value):
        self.set(key, value)

    def __delitem__(self, key):
        self.reset(key)

    def __contains__(self, key):
        return key in self.data or key in self.defaults

    def set_default(self, key, value):
        if not isinstance(key, list):
            self.defaults[key] = value
        else:
            node = self.defaults
            for k in key[:-1]:
                if k not in node:
                    node[k] = {}
                node = node[k]

            node[key[-1]] = value

    def set(self, key, value):
        self.data[key] = value

    def set_path(self, path, value):
        node = self.data
        for k in path[:-1]:
            if not isinstance(node.get(k), dict):
                node[k] = {}
            node = node[k]
        node[path[-1]] = value

    def reset(self, key):
        del self.data[key]

    def clear(self):
        self.data = {}
        self._loaded_config = None

    def get(self, key, default=None):
        try:
            return self[key]
        except KeyError:
            return default

    def get_loaded_config(self):
        return self._loaded_config

    def as_dict(self):
        merged = {}
        for key in set(self.defaults) | set(self.data):
            merged[key] = self[key]
        return merged

    def load(self, path=None):
        if path:
            if not os.path.isfile(path):
                raise ConfigError("config file not found: {}".format(path))

            with open(path, "r") as f:
                try:
                    self.data = yaml.safe_load(f) or {}
                except yaml.YAMLError as e:
                    raise ConfigError("unable to parse YAML in {}: {}".format(path, e))

            if not isinstance(self.data, dict):
                raise ConfigError("expected a mapping at the top of {}".format(path))

            log.info("loaded config from: %s", path)
            self._loaded_config = path

        self.load_env()
        self.validate()

    def load_env(self):
        for env_var, key_path in self.env_bindings.items():
            key = self.env_prefix + env_var
            for candidate in (key, key.upper()):
                if candidate in os.environ:
                    self.env_override(candidate, key_path)
                    break

    def bind_env(self, key, path=None):
        self.env_bindings[key] = path if path is not None else [key]

    def bind_env_and_set_default(self, key, path, value):
        if not isinstance(path, list):
            path = [path]

        if isinstance(value, dict) and path[-1] not in self.POLYMORPHIC_KEYS:
            for k, v in value.items():
                self.bind_env_and_set_default("{}_{}".format(key, k), path + [k], v)
            if not value:
                self.set_default(path, {})
        else:
            self.bind_env(key, path)
            self.set_default(path, value)

    def _default_at(self, path):
        node = self.defaults
        for k in path:
            if not isinstance(node, dict) or k not in node:
                return None
            node = node[k]
        return node

    def env_override(self, env_var, path):
        raw = os.environ[env_var]
        default = self._default_at(path)
        try:
            value = self.coerce(raw, default)
        except (TypeError, ValueError, yaml.YAMLError) as e:
            raise ConfigError("unable to override {} from {}: {}".format('.'.join(path), env_var, e))

        self.set_path(path, value)
        log.debug("overrode %s from environment variable %s", '.'.join(path), env_var)
        return True

    @staticmethod
    def coerce(raw, default):
        if isinstance(default, bool):
            return _is_affirmative(raw)
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            return float(raw)
        if isinstance(default, str):
            return raw
        # lists, dicts and unset defaults take YAML literals
        return yaml.safe_load(raw)

    def validate(self):
        errors = []
        self._validate_node(self.data, self.defaults, [], errors)
        if errors:
            raise ConfigError("invalid configuration: {}".format('; '.join(errors)))

    def _validate_node(self, data, defaults, path, errors):
        for key, value in data.items():
            key_path = path + [key]
            dotted = '.'.join(str(k) for k in key_path)
            if key not in defaults:
                errors.append("unknown key '{}'".format(dotted))
                continue

            default = defaults[key]
            if key in self.POLYMORPHIC_KEYS:
                if not isinstance(value, (dict, list)):
                    errors.append("'{}' must be a mapping or a list".format(dotted))
                continue

            if isinstance(default, dict):
                if not isinstance(value, dict):
                    errors.append("'{}' must be a mapping".format(dotted))
                else:
                    self._validate_node(value, default, key_path, errors)
            elif value is None or default is None:
                continue
            elif isinstance(default, bool):
                if not isinstance(value, bool):
                    errors.append("'{}' must be a boolean".format(dotted))
            elif isinstance(default, (int, float)):
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    errors.append("'{}' must be a number".format(dotted))
                elif isinstance(default, int) and not isinstance(value, int):
                    errors.append("'{}' must be an integer".format(dotted))
            elif isinstance(default, list):
                if not isinstance(value, list):
                    errors.append("'{}' must be a list".format(dotted))
            elif isinstance(default, str):
                if not isinstance(value, str):
                    errors.append("'{}' must be a string".format(dotted))
