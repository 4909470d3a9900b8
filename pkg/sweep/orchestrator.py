# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import multiprocessing
import os
import queue
import signal
import threading
from collections import deque
from dataclasses import dataclass

from serialize.records import append_record, read_records, repair_records
from sweep.manifest import CellStatus, open_manifest
from sweep.worker import Worker, WorkerExited, execute, failed_record
from utils.signals import SignalHandler

log = logging.getLogger(__name__)


class SweepError(Exception):
    pass


@dataclass
class SweepSummary:
    total: int
    done: int = 0
    failed: int = 0
    skipped: int = 0
    remaining: int = 0
    interrupted: bool = False

    @property
    def executed(self):
        return self.done + self.failed


class Orchestrator(object):
    """
    Runs the pending cells of a sweep, inline or on worker processes, and
    is the only writer of the records file and the manifest. A record is
    appended before its cell is closed in the manifest.
    """

    POLL_TIMEOUT = 1  # seconds
    WORKER_JOIN_TIME = 2

    def __init__(self, sweep, resume=False, max_runs=None):
        if max_runs is not None and max_runs < 1:
            raise SweepError("max_runs must be at least 1")
        self.sweep = sweep
        self.resume = resume
        self.max_runs = max_runs
        self.manifest = None
        self.summary = None
        self._lines = 0
        self._planned = 0
        self._deaths = 0
        self._stop = threading.Event()

    def stop(self):
        self._stop.set()

    def prepare(self):
        if not os.path.isdir(self.sweep.output_dir):
            os.makedirs(self.sweep.output_dir)
        if self.sweep.train.checkpoint and not os.path.isdir(self.sweep.paths['checkpoints']):
            os.makedirs(self.sweep.paths['checkpoints'])

        records_path = self.sweep.paths['records']
        self._lines = repair_records(records_path)
        self.manifest = open_manifest(self.sweep.paths['manifest'], self.sweep.config_hash(), self.sweep.cells(),
                                      resume=self.resume)
        if self.manifest.reconcile(enumerate(read_records(records_path), 1)):
            self.manifest.save()

    def pending_specs(self):
        return [spec for spec in self.sweep.run_specs() if self.manifest.status(spec.cell) == CellStatus.PENDING]

    def _claim(self, spec):
        self.manifest.mark(spec.cell, CellStatus.RUNNING)
        self.manifest.save()

    def _complete(self, cell, record):
        append_record(self.sweep.paths['records'], record)
        self._lines += 1
        self.manifest.mark(cell, record.status, record_line=self._lines)
        self.manifest.save()

        if record.ok:
            self.summary.done += 1
        else:
            self.summary.failed += 1
            log.warning("cell %s failed: %s", cell, record.error)
        log.info("cell %s %s (%d/%d this sweep)", cell, record.status, self.summary.executed, self._planned)

    def run(self):
        self.prepare()
        specs = self.pending_specs()
        total = len(self.manifest.cells)
        self.summary = SweepSummary(total=total, skipped=total - len(specs))
        if self.max_runs is not None:
            specs = specs[:self.max_runs]
        self._planned = len(specs)

        if not specs:
            log.info("nothing to run: all %d cells are closed", total)
        else:
            log.info("running %d of %d cells with up to %d workers", len(specs), total, self.sweep.max_parallel)
            handler = SignalHandler()
            handler.register('sweep', self)
            if threading.current_thread() is threading.main_thread():
                handler.handle(signal.SIGTERM)
                handler.handle(signal.SIGINT)
            try:
                if self.sweep.max_parallel == 1 or len(specs) == 1:
                    self._run_inline(specs)
                else:
                    self._run_pool(specs)
            finally:
                handler.restore()

        counts = self.manifest.counts()
        self.summary.remaining = counts[CellStatus.PENDING] + counts[CellStatus.RUNNING]
        self.summary.interrupted = self._stop.is_set()
        log.info("sweep summary: %d done, %d failed, %d already closed, %d remaining%s",
                 self.summary.done, self.summary.failed, self.summary.skipped, self.summary.remaining,
                 " (interrupted)" if self.summary.interrupted else "")
        return self.summary

    def _run_inline(self, specs):
        for spec in specs:
            if self._stop.is_set():
                break
            self._claim(spec)
            try:
                record = execute(spec, stop_event=self._stop)
            except InterruptedError as e:
                log.info("run %s abandoned: %s", spec.cell, e)
                break
            self._complete(spec.cell, record)

    def _start_worker(self, result_queue):
        worker = Worker(multiprocessing.Queue(), result_queue)
        worker.start()
        return worker

    def _reap(self, workers, running, result_queue):
        """
        Replace workers that died. A cell its worker died on is closed as
        failed; the run is not retried.
        """
        for index, worker in enumerate(workers):
            if worker.is_alive():
                continue
            spec = running.pop(worker, None)
            log.error("worker %s exited with code %s%s", worker.name, worker.exitcode,
                      " while running {}".format(spec.cell) if spec else "")
            if spec is not None:
                self._complete(spec.cell, failed_record(spec, WorkerExited(
                    "worker exited with code {} during the run".format(worker.exitcode))))
            worker.task_queue.cancel_join_thread()
            self._deaths += 1
            if self._deaths > self._planned + len(workers):
                raise SweepError("workers keep exiting; {} deaths so far".format(self._deaths))
            workers[index] = self._start_worker(result_queue)

    def _run_pool(self, specs):
        result_queue = multiprocessing.Queue()
        workers = [self._start_worker(result_queue) for _ in range(min(self.sweep.max_parallel, len(specs)))]

        todo = deque(specs)
        # worker: the spec it is running; one cell per worker, so running means really running
        running = {}
        self._deaths = 0
        try:
            while (todo or running) and not self._stop.is_set():
                for worker in workers:
                    if not todo:
                        break
                    if worker not in running:
                        spec = todo.popleft()
                        self._claim(spec)
                        worker.task_queue.put(spec)
                        running[worker] = spec

                try:
                    cell, record = result_queue.get(True, self.POLL_TIMEOUT)
                except queue.Empty:
                    self._reap(workers, running, result_queue)
                    continue

                owner = next((w for w, spec in running.items() if spec.cell == cell), None)
                if owner is None:
                    log.warning("ignoring result for %s, which is no longer running", cell)
                    continue
                del running[owner]
                self._complete(cell, record)
        finally:
            self._stop_workers(workers)

    def _stop_workers(self, workers):
        for w in workers:
            if self._stop.is_set():
                w.stop()
            else:
                w.task_queue.put(None)

        for w in workers:
            w.join(self.WORKER_JOIN_TIME)
            if w.is_alive():
                log.error("worker %s did not stop, terminating it", w.name)
                w.terminate()
                w.join(self.WORKER_JOIN_TIME)
            w.task_queue.cancel_join_thread()


def run_sweep(sweep, resume=False, max_runs=None):
    return Orchestrator(sweep, resume=resume, max_runs=max_runs).run()
