# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .records import (
    DuplicateSeedError, RecordFormatError, SchemaVersionError,
    append_record, check_unique_seeds, dumps_record, loads_record, read_records, repair_records,
)
from .tables import (
    CURVES_COLUMNS, HISTOGRAM_COLUMNS, KDE_COLUMNS, SEEDS_COLUMNS,
    read_table, render_table, write_table,
)


__all__ = [
    'DuplicateSeedError', 'RecordFormatError', 'SchemaVersionError',
    'append_record', 'check_unique_seeds', 'dumps_record', 'loads_record', 'read_records', 'repair_records',
    'CURVES_COLUMNS', 'HISTOGRAM_COLUMNS', 'KDE_COLUMNS', 'SEEDS_COLUMNS',
    'read_table', 'render_table', 'write_table',
]
