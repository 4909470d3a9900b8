# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import csv
import io
import logging

from serialize.records import encode_float
from utils.util import atomic_write

log = logging.getLogger(__name__)


CURVES_COLUMNS = ('task', 'metric', 'axis_scale', 'param_count', 'statistic', 'value', 'ci_lo', 'ci_hi')
KDE_COLUMNS = ('task', 'metric', 'axis_scale', 'grid_point', 'density')
HISTOGRAM_COLUMNS = ('task', 'metric', 'axis_scale', 'bin_lo', 'bin_hi', 'count')
SEEDS_COLUMNS = ('task', 'metric', 'seed', 'breakthroughness', 'linearity', 'rank_breakthroughness',
                 'rank_linearity')


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, float):
        encoded = encode_float(value)
        return repr(encoded) if isinstance(encoded, float) else encoded
    return value


def render_table(columns, rows):
    """ CSV text with a header; rows are dicts keyed by column. """
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator='\n', extrasaction='raise')
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return out.getvalue()


def write_table(path, columns, rows):
    rows = list(rows)
    atomic_write(path, render_table(columns, rows))
    log.info("wrote %d rows to %s", len(rows), path)


def read_table(path):
    with open(path, 'r') as f:
        return list(csv.DictReader(f))
