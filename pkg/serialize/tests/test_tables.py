# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from collections import OrderedDict

import numpy as np
import pytest

from serialize.tables import CURVES_COLUMNS, KDE_COLUMNS, read_table, render_table, write_table


def test_render_header_and_cells():
    rows = [OrderedDict([('task', 'count'), ('metric', 'em@10'), ('axis_scale', 64), ('grid_point', 0.5),
                         ('density', np.float64(1.25))])]
    text = render_table(KDE_COLUMNS, rows)
    lines = text.splitlines()
    assert lines[0] == ','.join(KDE_COLUMNS)
    assert lines[1] == 'count,em@10,64,0.5,1.25'


def test_none_and_non_finite_cells():
    row = {'task': 'count', 'metric': 'em@10', 'axis_scale': 64, 'param_count': 10, 'statistic': 'mean_success',
           'value': None, 'ci_lo': float('nan'), 'ci_hi': float('inf')}
    line = render_table(CURVES_COLUMNS, [row]).splitlines()[1]
    assert line == 'count,em@10,64,10,mean_success,,nan,inf'


def test_unknown_column():
    with pytest.raises(ValueError):
        render_table(KDE_COLUMNS, [{'task': 'count', 'colour': 'red'}])


def test_write_and_read(tmp_path):
    path = str(tmp_path / 'kde.csv')
    write_table(path, KDE_COLUMNS, [
        {'task': 'count', 'metric': 'em@10', 'axis_scale': 64, 'grid_point': 0.0, 'density': 1.0},
        {'task': 'count', 'metric': 'em@10', 'axis_scale': 64, 'grid_point': 0.1, 'density': 2.0},
    ])
    rows = read_table(path)
    assert len(rows) == 2
    assert float(rows[1]['density']) == 2.0
    assert rows[0]['metric'] == 'em@10'
