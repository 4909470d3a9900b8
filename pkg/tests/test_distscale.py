# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import json
import os

import mock
import pytest

import distscale
from sweep import MANIFEST_FILE, RECORDS_FILE, SweepSummary
from sweep.tests.records import fake_record


SWEEP_YAML = """
task: count
sweep_axis: fixed_depth_scale_width
fixed_depth: 1
hidden_dims: [8, 16]
head_dim: 8
seeds: [0, 1, 2]
train:
  max_train_length: 4
  steps: 2
  batch_size: 2
  context_length: 32
  eval_lengths: [4]
  eval_items: 2
analysis:
  metrics: [em, final_train_loss]
  threshold: 0.15
  bootstrap_resamples: 50
max_parallel: 1
output_dir: {out}
"""


def _fake_train_run(model_config, train_config, checkpoint_path=None, stop_event=None):
    return fake_record(model_config, train_config)


@pytest.fixture
def sweep_config(tmp_path):
    path = tmp_path / 'sweep.yaml'
    path.write_text(SWEEP_YAML.format(out=str(tmp_path / 'out')))
    return str(path)


@pytest.fixture
def fake_training():
    with mock.patch('sweep.worker.train_run', side_effect=_fake_train_run) as train_run:
        yield train_run


def _records(tmp_path):
    with open(str(tmp_path / 'out' / RECORDS_FILE)) as f:
        return [json.loads(line) for line in f if line.strip()]


class TestCommandLine():
    def test_no_command(self, capsys):
        assert distscale.main([]) == 2
        assert 'Usage' in capsys.readouterr().err

    def test_unknown_command(self, capsys):
        assert distscale.main(['train']) == 3
        assert 'Unknown command: train' in capsys.readouterr().err

    def test_missing_config(self, tmp_path, capsys):
        assert distscale.main(['sweep', '-c', str(tmp_path / 'missing.yaml')]) == 1
        assert 'Problem initializing configuration' in capsys.readouterr().err

    def test_invalid_config(self, tmp_path, capsys):
        path = tmp_path / 'bad.yaml'
        path.write_text("train:\n  stepz: 3\n")
        assert distscale.main(['sweep', '-c', str(path)]) == 1
        assert 'train.stepz' in capsys.readouterr().err

    def test_sweep_needs_config(self, capsys):
        assert distscale.main(['sweep']) == 2
        assert 'sweep needs --config' in capsys.readouterr().err

    def test_sweep_bad_seed_range(self, sweep_config, capsys):
        assert distscale.main(['sweep', '-c', sweep_config, '--seed-range', '4:2']) == 2
        assert 'invalid seed range' in capsys.readouterr().err


class TestSweepCommand():
    def test_sweep(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0

        assert fake_training.call_count == 6
        records = _records(tmp_path)
        assert sorted((r['scale_label'], r['seed']) for r in records) == [
            ('d1-w16', 0), ('d1-w16', 1), ('d1-w16', 2), ('d1-w8', 0), ('d1-w8', 1), ('d1-w8', 2)]
        assert os.path.isfile(str(tmp_path / 'out' / MANIFEST_FILE))
        assert os.path.isfile(str(tmp_path / 'out' / 'sweep.log'))
        assert '6 done, 0 failed' in capsys.readouterr().out

    def test_sweep_seed_range_and_out(self, tmp_path, sweep_config, fake_training):
        out = tmp_path / 'elsewhere'
        assert distscale.main(['sweep', '-c', sweep_config, '--seed-range', '5:7', '-o', str(out)]) == 0

        with open(str(out / RECORDS_FILE)) as f:
            seeds = sorted(json.loads(line)['seed'] for line in f)
        assert seeds == [5, 5, 6, 6]
        assert not os.path.exists(str(tmp_path / 'out'))

    def test_sweep_existing_output_needs_resume(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config, '--max-runs', '2']) == 0
        assert len(_records(tmp_path)) == 2
        assert '4 remaining of 6 cells' in capsys.readouterr().out

        assert distscale.main(['sweep', '-c', sweep_config]) == 1
        assert 'sweep failed' in capsys.readouterr().err

        assert distscale.main(['sweep', '-c', sweep_config, '--resume']) == 0
        assert len(_records(tmp_path)) == 6
        assert fake_training.call_count == 6

    def test_sweep_interrupted(self, sweep_config, capsys):
        summary = SweepSummary(total=6, done=1, remaining=5, interrupted=True)
        with mock.patch('distscale.run_sweep', return_value=summary):
            assert distscale.main(['sweep', '-c', sweep_config]) == 1
        assert 'run again with --resume' in capsys.readouterr().err

    def test_sweep_changed_config_refuses_resume(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0

        with open(sweep_config) as f:
            text = f.read()
        with open(sweep_config, 'w') as f:
            f.write(text.replace('steps: 2', 'steps: 3'))

        assert distscale.main(['sweep', '-c', sweep_config, '--resume']) == 1
        assert fake_training.call_count == 6


class TestAnalyzeCommand():
    def test_analyze(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0
        assert distscale.main(['analyze', '-c', sweep_config]) == 0

        out = tmp_path / 'out' / 'analysis'
        for name in ('curves.csv', 'kde.csv', 'histograms.csv', 'seeds.csv', 'report.txt'):
            assert os.path.isfile(str(out / name))
        with open(str(out / 'report.txt')) as f:
            report = f.read()
        assert 'count / em@4' in report

    def test_analyze_records_without_config(self, tmp_path, sweep_config, fake_training):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0

        records = str(tmp_path / 'out' / RECORDS_FILE)
        out = str(tmp_path / 'report')
        # the default metric list asks for metrics the fake runs never produced
        assert distscale.main(['analyze', '--records', records, '-o', out]) == 1

    def test_analyze_missing_records(self, tmp_path, capsys):
        assert distscale.main(['analyze', '--records', str(tmp_path / 'none.jsonl')]) == 1
        assert 'records file not found' in capsys.readouterr().err


class TestValidateCommand():
    def test_validate(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0
        capsys.readouterr()

        assert distscale.main(['validate', '-c', sweep_config]) == 0
        assert '6 records (0 failed) are valid' in capsys.readouterr().out

    def test_validate_duplicate_seed(self, tmp_path, sweep_config, fake_training, capsys):
        assert distscale.main(['sweep', '-c', sweep_config]) == 0

        path = str(tmp_path / 'out' / RECORDS_FILE)
        with open(path) as f:
            first = f.readline()
        with open(path, 'a') as f:
            f.write(first)

        assert distscale.main(['validate', '--records', path]) == 1
        assert 'appears twice' in capsys.readouterr().err

    def test_validate_malformed(self, tmp_path, capsys):
        path = tmp_path / 'records.jsonl'
        path.write_text('{"seed": \n{}\n')
        assert distscale.main(['validate', '--records', str(path)]) == 1


class TestTasksCommand():
    @pytest.mark.parametrize("task", ['count', 'addition'])
    def test_dump(self, task, capsys):
        assert distscale.main(['tasks', 'dump', '--task', task, '--length', '5', '-n', '4', '--check']) == 0
        lines = capsys.readouterr().out.strip().split('\n')
        assert len(lines) == 4
        for line in lines:
            assert '>' in line

    def test_dump_deterministic(self, capsys):
        distscale.main(['tasks', 'dump', '--task', 'count', '--length', '6', '-n', '3', '--seed', '7'])
        first = capsys.readouterr().out
        distscale.main(['tasks', 'dump', '--task', 'count', '--length', '6', '-n', '3', '--seed', '7'])
        assert capsys.readouterr().out == first

    def test_dump_needs_subcommand(self):
        assert distscale.main(['tasks']) == 2
        assert distscale.main(['tasks', 'list']) == 2

    def test_dump_unknown_task(self, capsys):
        assert distscale.main(['tasks', 'dump', '--task', 'sort']) == 1
        assert 'unknown task kind' in capsys.readouterr().err


class TestGradcheckCommand():
    @pytest.mark.slow
    def test_gradcheck(self, capsys):
        assert distscale.main(['gradcheck']) == 0
        assert 'Gradient check passed' in capsys.readouterr().out

    def test_gradcheck_failure(self, capsys):
        report = mock.Mock(errors={'wq': 1e-9, 'w_out': 0.5}, rtol=1e-5, passed=False, worst=('w_out', 0.5))
        with mock.patch('distscale.gradcheck', return_value=report):
            assert distscale.main(['gradcheck']) == 1
        assert 'w_out has relative error' in capsys.readouterr().err
