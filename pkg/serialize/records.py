# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import json
import logging
import math
import os

from trainer.record import RECORD_FORMAT_VERSION, RunRecord, RunStatus
from utils.util import append_line

log = logging.getLogger(__name__)


class RecordFormatError(Exception):

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {}: {}".format(lineno, message)
        super(RecordFormatError, self).__init__(message)


class SchemaVersionError(RecordFormatError):
    pass


class DuplicateSeedError(RecordFormatError):
    pass


REQUIRED_KEYS = ('format_version', 'status', 'task_kind', 'seed', 'model_config', 'train_config',
                 'scale_label', 'param_count', 'metrics')
NON_FINITE = {'inf': float('inf'), '-inf': float('-inf'), 'nan': float('nan')}


def encode_float(value):
    """ JSON-safe float: non-finite values become "inf", "-inf" or "nan". """
    if value is None or isinstance(value, str):
        return value
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return value


def decode_float(value):
    if isinstance(value, str):
        try:
            return NON_FINITE[value]
        except KeyError:
            raise ValueError("not a number: {!r}".format(value))
    return None if value is None else float(value)


def _plain(value):
    """ Recursively turn numpy scalars into builtins and protect non-finite floats. """
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, 'item') and not isinstance(value, (str, bytes)):
        value = value.item()
    if isinstance(value, float):
        return encode_float(value)
    return value


def dumps_record(record):
    data = _plain(record.as_dict())
    return json.dumps(data, sort_keys=True, allow_nan=False)


def loads_record(line, lineno=None):
    try:
        data = json.loads(line)
    except ValueError as e:
        raise RecordFormatError("invalid JSON: {}".format(e), lineno)
    if not isinstance(data, dict):
        raise RecordFormatError("expected a JSON object", lineno)

    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise RecordFormatError("missing keys: {}".format(', '.join(missing)), lineno)
    if data['format_version'] != RECORD_FORMAT_VERSION:
        raise SchemaVersionError("format_version {} is not {}".format(
            data['format_version'], RECORD_FORMAT_VERSION), lineno)
    if data['status'] not in RunStatus.ALL:
        raise RecordFormatError("unknown status {!r}".format(data['status']), lineno)

    try:
        data['metrics'] = {
            name: {int(length): decode_float(value) for length, value in by_length.items()}
            for name, by_length in data['metrics'].items()
        }
        data['final_train_loss'] = decode_float(data.get('final_train_loss'))
        data['train_loss_trace'] = [[int(step), decode_float(loss)] for step, loss in data.get('train_loss_trace', [])]
        for entry in data.get('eval_trace', []):
            entry['em'] = {int(length): decode_float(value) for length, value in entry.get('em', {}).items()}
        return RunRecord(**data)
    except (AttributeError, TypeError, ValueError) as e:
        raise RecordFormatError("malformed record: {}".format(e), lineno)


def append_record(path, record):
    """ Append one record as a single complete line. """
    append_line(path, dumps_record(record))


def read_records(path):
    """
    Parse a records file. A final line without its newline is the
    remnant of an interrupted append and is skipped with a warning; any
    other malformed line raises RecordFormatError with its line number.
    """
    if not os.path.exists(path):
        return []

    with open(path, 'r') as f:
        lines = f.read().split('\n')

    # a complete file ends with '\n', leaving an empty last element
    tail = lines.pop()
    records = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        records.append(loads_record(line, lineno))

    if tail.strip():
        try:
            records.append(loads_record(tail, len(lines) + 1))
        except RecordFormatError as e:
            log.warning("skipping truncated last line of %s: %s", path, e)
    return records


def check_unique_seeds(records):
    seen = set()
    for index, record in enumerate(records, 1):
        key = (record.task_kind, record.scale_label, record.seed)
        if key in seen:
            raise DuplicateSeedError("seed {} appears twice at scale {}".format(record.seed, record.scale_label), index)
        seen.add(key)


def repair_records(path):
    """
    Drop a trailing partial line left by an interrupted append so the next
    append starts on a fresh line. Returns the number of complete lines.
    """
    if not os.path.exists(path):
        return 0

    with open(path, 'rb') as f:
        data = f.read()
    complete = data.rfind(b'\n') + 1
    if complete < len(data):
        log.warning("dropping %d bytes of truncated record from %s", len(data) - complete, path)
        with open(path, 'r+b') as f:
            f.truncate(complete)
            f.flush()
            os.fsync(f.fileno())
    return data[:complete].count(b'\n')
