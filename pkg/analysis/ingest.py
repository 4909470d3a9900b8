# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict

from analysis.errors import AnalysisError
from analysis.population import SweepAxis, populations_from_records
from serialize.records import append_record, check_unique_seeds, read_records
from trainer.record import RunRecord

log = logging.getLogger(__name__)


def ingest_run_records(path, axis=SweepAxis.FIXED_DEPTH_SCALE_WIDTH):
    """
    Read a records file into PopulationDistributions, one per
    (task, scale, metric, eval_length). Duplicate (scale, seed) pairs and
    unknown schema versions are errors.
    """
    records = read_records(path)
    check_unique_seeds(records)
    populations = []
    for group in populations_from_records(records, axis).values():
        populations.extend(group)
    log.info("ingested %d records into %d populations from %s", len(records), len(populations), path)
    return populations


def records_from_populations(populations):
    """
    Rebuild minimal RunRecords from populations, for per-seed metrics that
    were produced outside a sweep. Values sharing (task, scale, seed) land
    in one record. Scales without a param count keep it None and are read
    back in the order they appear here. Only final_train_loss may come
    without an eval length.
    """
    records = OrderedDict()
    for population in populations:
        if population.eval_length is None and population.metric_name != 'final_train_loss':
            raise AnalysisError("population {} of {} has no eval length; only final_train_loss is stored "
                                "without one".format(population.scale_label, population.metric_name))
        for seed, value in zip(population.seed_ids, population.values.tolist()):
            key = (population.task_kind, population.scale_label, seed)
            if key not in records:
                records[key] = RunRecord(
                    task_kind=population.task_kind, seed=seed, model_config={}, train_config={},
                    scale_label=population.scale_label, param_count=population.param_count)
            record = records[key]
            if population.metric_name == 'final_train_loss':
                record.final_train_loss = value
            else:
                record.metrics.setdefault(population.metric_name, {})[population.eval_length] = value
    return list(records.values())


def write_populations(path, populations):
    for record in records_from_populations(populations):
        append_record(path, record)
