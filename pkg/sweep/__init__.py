# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

from .spec import (
    CHECKPOINT_DIR, LOG_FILE, MANIFEST_FILE, RECORDS_FILE,
    RunSpec, SweepConfig, cell_id, scale_grid, seeds_from_config,
)
from .manifest import CellStatus, Manifest, ManifestError, open_manifest
from .worker import Worker, WorkerExited, execute, failed_record
from .orchestrator import Orchestrator, SweepError, SweepSummary, run_sweep


__all__ = [
    'CHECKPOINT_DIR', 'LOG_FILE', 'MANIFEST_FILE', 'RECORDS_FILE',
    'RunSpec', 'SweepConfig', 'cell_id', 'scale_grid', 'seeds_from_config',
    'CellStatus', 'Manifest', 'ManifestError', 'open_manifest',
    'Worker', 'WorkerExited', 'execute', 'failed_record',
    'Orchestrator', 'SweepError', 'SweepSummary', 'run_sweep',
]
