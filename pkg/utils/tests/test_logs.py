# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging

import mock

from utils import logs


def test_initialize_logging_file(tmp_path):
    log_file = str(tmp_path / 'distscale.log')
    root = logging.getLogger()
    before = list(root.handlers)

    with mock.patch('utils.logs.config', {'log_level': 'debug', 'logging': {'disable_file_logging': False}}):
        logs.initialize_logging('distscale', log_file=log_file)

    added = [h for h in root.handlers if h not in before]
    try:
        assert len(added) == 1
        logging.getLogger('sweep.test').warning("run %s diverged", 'd1-w64/3')
        added[0].flush()
        with open(log_file) as f:
            line = f.read()
        assert '| WARNING | ds.distscale | sweep.test(' in line
        assert line.rstrip().endswith('run d1-w64/3 diverged')
    finally:
        for handler in added:
            root.removeHandler(handler)
            handler.close()


def test_initialize_logging_file_disabled(tmp_path):
    log_file = str(tmp_path / 'distscale.log')
    root = logging.getLogger()
    before = list(root.handlers)

    with mock.patch('utils.logs.config', {'log_level': 'info', 'logging': {'disable_file_logging': True}}):
        logs.initialize_logging('distscale', log_file=log_file)

    assert [h for h in root.handlers if h not in before] == []


def test_add_file_handler_unwritable(tmp_path):
    with mock.patch('utils.logs.os.access', return_value=False):
        assert logs.add_file_handler('distscale', str(tmp_path / 'x.log')) is None
