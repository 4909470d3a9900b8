# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import json
import logging
import os
from collections import OrderedDict

from utils.util import atomic_write

log = logging.getLogger(__name__)


MANIFEST_FORMAT_VERSION = 1


class ManifestError(Exception):
    pass


class CellStatus(object):

    PENDING = 'pending'
    RUNNING = 'running'
    DONE = 'done'
    FAILED = 'failed'

    ALL = (PENDING, RUNNING, DONE, FAILED)
    TERMINAL = (DONE, FAILED)
    TRANSITIONS = {
        PENDING: (RUNNING,),
        RUNNING: (DONE, FAILED),
        DONE: (),
        FAILED: (),
    }


class Manifest(object):
    """
    Per-cell status of a sweep, keyed "<scale>/<seed>". Only the
    orchestrator writes it, always through a temporary file and a rename.
    """

    def __init__(self, path, config_hash, cells=None):
        self.path = path
        self.config_hash = config_hash
        self.cells = OrderedDict(cells or ())

    @classmethod
    def load(cls, path):
        try:
            with open(path, 'r') as f:
                data = json.load(f)
        except (IOError, OSError) as e:
            raise ManifestError("unable to read manifest {}: {}".format(path, e))
        except ValueError as e:
            raise ManifestError("corrupt manifest {}: {}".format(path, e))

        if not isinstance(data, dict) or data.get('format_version') != MANIFEST_FORMAT_VERSION:
            raise ManifestError("unsupported manifest format in {}".format(path))
        for cell, entry in data.get('cells', {}).items():
            if entry.get('status') not in CellStatus.ALL:
                raise ManifestError("cell {} has unknown status {!r}".format(cell, entry.get('status')))
        return cls(path, data.get('config_hash'), data.get('cells', {}))

    def save(self):
        data = {
            'format_version': MANIFEST_FORMAT_VERSION,
            'config_hash': self.config_hash,
            'cells': self.cells,
        }
        atomic_write(self.path, json.dumps(data, indent=2, sort_keys=False) + '\n')

    def add_cells(self, cells):
        added = 0
        for cell in cells:
            if cell not in self.cells:
                self.cells[cell] = {'status': CellStatus.PENDING, 'record_line': None}
                added += 1
        return added

    def status(self, cell):
        return self.cells[cell]['status']

    def mark(self, cell, status, record_line=None):
        current = self.status(cell)
        if status not in CellStatus.TRANSITIONS[current]:
            raise ManifestError("cell {} cannot go from {} to {}".format(cell, current, status))
        self.cells[cell] = {'status': status, 'record_line': record_line}

    def reclaim(self):
        """ Cells left running by an interrupted sweep go back to pending. """
        reclaimed = [cell for cell, entry in self.cells.items() if entry['status'] == CellStatus.RUNNING]
        for cell in reclaimed:
            self.cells[cell] = {'status': CellStatus.PENDING, 'record_line': None}
        if reclaimed:
            log.info("reclaimed %d cells left running", len(reclaimed))
        return reclaimed

    def reconcile(self, records):
        """
        Close cells whose record reached the records file although the
        manifest was not saved afterwards. records is [(line, RunRecord)].
        """
        closed = 0
        for line, record in records:
            cell = '{}/{}'.format(record.scale_label, record.seed)
            entry = self.cells.get(cell)
            if entry is None or entry['status'] in CellStatus.TERMINAL:
                continue
            self.cells[cell] = {'status': record.status, 'record_line': line}
            closed += 1
        if closed:
            log.warning("%d cells had records but were not closed in the manifest", closed)
        return closed

    def in_status(self, status):
        return [cell for cell, entry in self.cells.items() if entry['status'] == status]

    def counts(self):
        counts = OrderedDict((status, 0) for status in CellStatus.ALL)
        for entry in self.cells.values():
            counts[entry['status']] += 1
        return counts


def open_manifest(path, config_hash, cells, resume=False):
    """
    Load the manifest of a sweep being resumed, or start a new one. Resuming
    under a different run configuration is refused, as is silently reusing
    an existing output directory without resume.
    """
    if os.path.exists(path):
        if not resume:
            raise ManifestError("{} already exists; pass --resume to continue that sweep".format(path))
        manifest = Manifest.load(path)
        if manifest.config_hash != config_hash:
            raise ManifestError("the configuration changed since {} was written (hash {} != {})".format(
                path, manifest.config_hash, config_hash))
        manifest.reclaim()
    else:
        manifest = Manifest(path, config_hash)

    added = manifest.add_cells(cells)
    if added:
        log.info("%d new cells added to the manifest", added)
    manifest.save()
    return manifest
