# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import os

import pytest

from analysis import (
    AnalysisError,
    AnalysisSettings,
    analyze,
    ingest_run_records,
    records_from_populations,
    write_populations,
)
from serialize.records import DuplicateSeedError, append_record, read_records


def test_empty_file(tmp_path):
    path = str(tmp_path / 'records.jsonl')
    open(path, 'w').close()
    assert ingest_run_records(path) == []
    assert ingest_run_records(str(tmp_path / 'missing.jsonl')) == []


def test_ingest(tmp_path, drifting_records):
    path = str(tmp_path / 'records.jsonl')
    for record in drifting_records:
        append_record(path, record)

    populations = ingest_run_records(path)
    em = [p for p in populations if p.metric_name == 'em' and p.eval_length == 10]
    assert [p.scale_label for p in em] == ['d1-w64', 'd1-w128', 'd1-w256']
    assert all(len(p) == 6 for p in em)
    assert em[1].by_seed()[5] == pytest.approx(0.625)


def test_duplicate_seed(tmp_path, make_record):
    path = str(tmp_path / 'records.jsonl')
    append_record(path, make_record(0))
    append_record(path, make_record(0))
    with pytest.raises(DuplicateSeedError):
        ingest_run_records(path)


def test_populations_round_trip(tmp_path, make_population):
    populations = [
        make_population([0.1, 0.2], scale_label='d1-w64', param_count=10, seeds=[4, 9]),
        make_population([0.3, 0.4], scale_label='d1-w128', param_count=20, seeds=[4, 9]),
        make_population([0.5, 0.6], scale_label='d1-w64', param_count=10, seeds=[4, 9], metric='minprob'),
    ]
    assert len(records_from_populations(populations)) == 4

    path = str(tmp_path / 'records.jsonl')
    write_populations(path, populations)
    ingested = ingest_run_records(path)
    by_key = {(p.metric_name, p.scale_label): p for p in ingested}
    assert set(by_key) == {('em', 'd1-w64'), ('em', 'd1-w128'), ('minprob', 'd1-w64')}
    assert by_key[('em', 'd1-w128')].by_seed() == {4: 0.3, 9: 0.4}
    assert by_key[('minprob', 'd1-w64')].eval_length == 10


def test_final_train_loss_round_trip(tmp_path, make_population):
    populations = [
        make_population([0.1, 0.9], metric='final_train_loss', eval_length=None),
        make_population([0.5, 0.6], metric='em', eval_length=10),
    ]
    path = str(tmp_path / 'records.jsonl')
    write_populations(path, populations)

    by_metric = {p.metric_name: p for p in ingest_run_records(path)}
    assert by_metric['final_train_loss'].eval_length is None
    assert by_metric['final_train_loss'].by_seed() == {0: 0.1, 1: 0.9}
    assert by_metric['em'].by_seed() == {0: 0.5, 1: 0.6}


def test_length_metric_without_eval_length(tmp_path, make_population):
    path = str(tmp_path / 'records.jsonl')
    with pytest.raises(AnalysisError) as e:
        write_populations(path, [make_population([0.1, 0.9], eval_length=None)])
    assert 'no eval length' in str(e.value)
    assert not os.path.exists(path)


def test_populations_without_param_count(tmp_path, make_population):
    populations = [
        make_population([0.0, 0.1, 0.0, 0.2], scale_label='d1-w64'),
        make_population([0.4, 0.9, 0.6, 1.0], scale_label='d1-w128'),
        make_population([1.0, 1.0, 0.9, 1.0], scale_label='d1-w256'),
    ]
    path = str(tmp_path / 'records.jsonl')
    write_populations(path, populations)
    assert all(r.param_count is None for r in read_records(path))

    ingested = ingest_run_records(path)
    # no counts and no model configs: the written order stands
    assert [p.scale_label for p in ingested] == ['d1-w64', 'd1-w128', 'd1-w256']
    assert all(p.param_count is None for p in ingested)

    out = str(tmp_path / 'analysis')
    report = analyze(path, out, AnalysisSettings(metrics=['em'], threshold=0.5, bootstrap_resamples=20))
    means = [r for r in report.curves if r['metric'] == 'em@10' and r['statistic'] == 'mean']
    assert [r['param_count'] for r in means] == [None, None, None]
    assert [r['value'] for r in means] == pytest.approx([0.075, 0.725, 0.975])
    assert report.sections[0]['mode_breakthrough'] == 'd1-w64'
    assert os.path.isfile(os.path.join(out, 'report.txt'))
