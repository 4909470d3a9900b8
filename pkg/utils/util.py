# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import os
import logging
import tempfile

log = logging.getLogger(__name__)


def _is_affirmative(s):
    if s is None:
        return False
    # int or real bool
    if isinstance(s, int):
        return bool(s)
    # try string cast
    try:
        return s.lower() in ('yes', 'true', '1')
    except AttributeError:
        log.info("unexpected type for %s - defaulting to False", s)
        return False  # if we can't cast, just false


def parse_seed_range(text):
    """
    Parse a `START:STOP` seed range (STOP exclusive) into a list of seeds.
    A single integer N is read as `0:N`.
    """
    text = text.strip()
    if ':' in text:
        start, stop = text.split(':', 1)
        start, stop = int(start), int(stop)
    else:
        start, stop = 0, int(text)

    if start < 0 or stop <= start:
        raise ValueError("invalid seed range: {}".format(text))

    return list(range(start, stop))


def atomic_write(path, data):
    """ Write `data` (str or bytes) to `path` through a temporary file and a rename. """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'wb' if isinstance(data, bytes) else 'w') as f:
            f.write(data)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp_path, path)
    except Exception:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def append_line(path, line):
    """
    Append one complete line with a single write on an O_APPEND descriptor,
    so a killed process leaves either the whole line or nothing.
    """
    if not line.endswith('\n'):
        line += '\n'

    payload = line.encode('utf-8')
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        written = os.write(fd, payload)
        if written != len(payload):
            raise IOError("short write appending to {}".format(path))
        os.fsync(fd)
    finally:
        os.close(fd)
