# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import multiprocessing
import queue
import signal

from model import ARCHITECTURE, param_count
from trainer import RunRecord, RunStatus, train_run

log = logging.getLogger(__name__)


class WorkerExited(Exception):
    pass


def failed_record(spec, error):
    return RunRecord(
        task_kind=spec.train_config.task_kind,
        seed=spec.seed,
        model_config=spec.model_config.as_dict(),
        train_config=spec.train_config.as_dict(),
        scale_label=spec.scale_label,
        param_count=param_count(spec.model_config),
        status=RunStatus.FAILED,
        error='{}: {}'.format(type(error).__name__, error),
        architecture=dict(ARCHITECTURE),
    )


def execute(spec, stop_event=None):
    """
    Train and score one cell. Any failure becomes a failed record; only an
    interruption through stop_event propagates.
    """
    try:
        return train_run(spec.model_config, spec.train_config, checkpoint_path=spec.checkpoint_path,
                         stop_event=stop_event)
    except InterruptedError:
        raise
    except Exception as e:
        log.exception("run %s failed", spec.cell)
        return failed_record(spec, e)


class Worker(multiprocessing.Process):
    """
    Pulls RunSpecs from its own task_queue and pushes (cell, RunRecord) on
    the shared result_queue. A None spec or stop() ends the loop.
    """

    GET_TIMEOUT = 1  # seconds

    def __init__(self, task_queue, result_queue):
        super(Worker, self).__init__(daemon=True)
        self.task_queue = task_queue
        self.result_queue = result_queue
        self.exit = multiprocessing.Event()

    def stop(self):
        self.exit.set()

    def _process_run(self):
        try:
            # blocking for a second so we can check the exit condition
            spec = self.task_queue.get(True, self.GET_TIMEOUT)
        except queue.Empty:
            return

        if spec is None:
            self.exit.set()
            return

        try:
            record = execute(spec, stop_event=self.exit)
        except InterruptedError as e:
            log.info("run %s abandoned: %s", spec.cell, e)
            return
        self.result_queue.put((spec.cell, record))

    def run(self):
        # the orchestrator owns interrupts and stops workers itself
        signal.signal(signal.SIGINT, signal.SIG_IGN)
        signal.signal(signal.SIGTERM, signal.SIG_DFL)
        while not self.exit.is_set():
            self._process_run()
