#!/usr/bin/env python

# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import os
import sys
from optparse import OptionParser

import numpy as np

from analysis import AnalysisError, AnalysisSettings, analyze
from config import ConfigError, config
from model import ModelError, gradcheck, gradcheck_config
from serialize.records import RecordFormatError, check_unique_seeds, read_records
from sweep import RECORDS_FILE, ManifestError, SweepConfig, SweepError, run_sweep
from taskgen import TaskKind, TaskRangeError, gen_example, oracle_check, vocab_for
from trainer import RunStatus
from utils.logs import add_file_handler, initialize_logging
from utils.util import parse_seed_range

log = logging.getLogger('distscale')

CRED = '\033[91m'
CEND = '\033[0m'

ANALYSIS_DIR = 'analysis'


class UsageError(Exception):
    pass


def fail(message):
    sys.stderr.write(CRED + message + '\n' + CEND)


def init_config(path=None):
    config.clear()
    config.load(path)


def cmd_sweep(options, args):
    if not options.config:
        raise UsageError("sweep needs --config")
    try:
        seeds = parse_seed_range(options.seed_range) if options.seed_range else None
    except ValueError as e:
        raise UsageError(str(e))

    sweep = SweepConfig.from_config(config, seeds=seeds, output_dir=options.out, max_parallel=options.max_parallel,
                                    eval_every=options.eval_every)
    if not os.path.isdir(sweep.output_dir):
        os.makedirs(sweep.output_dir)
    handler = None
    if not config['logging'].get('disable_file_logging'):
        handler = add_file_handler('distscale', sweep.paths['log'])

    try:
        summary = run_sweep(sweep, resume=options.resume, max_runs=options.max_runs)
    finally:
        if handler is not None:
            logging.getLogger().removeHandler(handler)
            handler.close()

    print("{} done, {} failed, {} already closed, {} remaining of {} cells".format(
        summary.done, summary.failed, summary.skipped, summary.remaining, summary.total))
    if summary.interrupted:
        fail("Sweep interrupted; run again with --resume to finish it")
        return 1
    return 0


def cmd_analyze(options, args):
    records_path = options.records or os.path.join(config['output_dir'], RECORDS_FILE)
    if not os.path.isfile(records_path):
        raise AnalysisError("records file not found: {}".format(records_path))
    out = options.out or os.path.join(os.path.dirname(os.path.abspath(records_path)), ANALYSIS_DIR)

    settings = AnalysisSettings.from_config(config['analysis'], threshold=options.threshold)
    # without a config file the axis is inferred from the records
    axis = config['sweep_axis'] if options.config else None
    report = analyze(records_path, out, settings, axis)
    print("Analyzed {} metric groups into {}".format(len(report.sections), out))
    return 0


def cmd_tasks(options, args):
    if args[1:] != ['dump']:
        raise UsageError("the tasks command takes one subcommand: dump")

    task = options.task or config['task']
    length = options.length or config['train']['max_train_length']
    max_eval_digits = length if task == TaskKind.ADDITION else None
    vocab = vocab_for(task, max_eval_digits)
    rng = np.random.default_rng(options.seed)

    for _ in range(options.n):
        example = gen_example(rng, task, length, length, max_eval_digits)
        line = vocab.render(example.tokens)
        if options.check:
            if tuple(vocab.parse(line)) != tuple(example.tokens) or not oracle_check(vocab, example):
                fail("Example failed its check: {}".format(line))
                return 1
        print(line)
    return 0


def cmd_gradcheck(options, args):
    report = gradcheck(gradcheck_config(), seed=options.seed)
    for name, error in report.errors.items():
        print("{:<24} {:.3e}".format(name, error))

    name, error = report.worst
    if not report.passed:
        fail("Gradient check failed: {} has relative error {:.3e} > {:.0e}".format(name, error, report.rtol))
        return 1
    print("Gradient check passed (worst {} at {:.3e})".format(name, error))
    return 0


def cmd_validate(options, args):
    records_path = options.records or os.path.join(config['output_dir'], RECORDS_FILE)
    if not os.path.isfile(records_path):
        raise RecordFormatError("records file not found: {}".format(records_path))

    records = read_records(records_path)
    check_unique_seeds(records)
    failed = sum(1 for r in records if r.status == RunStatus.FAILED)
    print("{}: {} records ({} failed) are valid".format(records_path, len(records), failed))
    return 0


# command: handler
COMMANDS = {
    'sweep': cmd_sweep,
    'analyze': cmd_analyze,
    'tasks': cmd_tasks,
    'gradcheck': cmd_gradcheck,
    'validate': cmd_validate,
}

# errors a command reports as a failure rather than a crash
COMMAND_ERRORS = (
    ConfigError, ManifestError, SweepError, AnalysisError, RecordFormatError, ModelError, TaskRangeError,
    OSError, ValueError,
)


def usage():
    return "Usage: %s %s [options]\n" % (os.path.basename(sys.argv[0]), "|".join(sorted(COMMANDS)))


def build_parser():
    parser = OptionParser(usage=usage().strip())
    parser.add_option('-c', '--config', dest='config', help='sweep configuration file (YAML)')
    parser.add_option('-o', '--out', dest='out', help='output directory, overriding output_dir')
    parser.add_option('--max-parallel', type='int', dest='max_parallel', help='concurrent training runs')
    parser.add_option('--resume', action='store_true', default=False, dest='resume',
                      help='continue the sweep recorded in the output directory')
    parser.add_option('--seed-range', dest='seed_range', help='seeds START:STOP, STOP exclusive')
    parser.add_option('--eval-every', type='int', dest='eval_every', help='evaluate EM every N steps')
    parser.add_option('--max-runs', type='int', dest='max_runs', help='stop after N completed runs')
    parser.add_option('--threshold', type='float', dest='threshold', help='EM success threshold')
    parser.add_option('--records', dest='records', help='records file to analyze or validate')
    parser.add_option('--task', dest='task', help='count or addition')
    parser.add_option('-n', type='int', default=1, dest='n', help='number of examples to dump')
    parser.add_option('--length', type='int', dest='length', help='example length')
    parser.add_option('--seed', type='int', default=0, dest='seed', help='random seed')
    parser.add_option('--check', action='store_true', default=False, dest='check',
                      help='re-parse and verify every dumped example')
    return parser


def main(argv=None):
    parser = build_parser()
    options, args = parser.parse_args(argv)
    if len(args) < 1:
        sys.stderr.write(usage())
        return 2

    command = args[0]
    if command not in COMMANDS:
        fail("Unknown command: {}".format(command))
        return 3

    try:
        init_config(options.config)
    except Exception as e:
        fail("Problem initializing configuration: {}".format(e))
        return 1
    initialize_logging('distscale')

    try:
        return COMMANDS[command](options, args)
    except UsageError as e:
        fail(str(e))
        sys.stderr.write(usage())
        return 2
    except COMMAND_ERRORS as e:
        log.debug("%s failed", command, exc_info=True)
        fail("{} failed: {}".format(command, e))
        return 1


if __name__ == "__main__":
    try:
        sys.exit(main())
    except Exception:
        try:
            logging.exception("Uncaught error running distscale")
        except Exception:
            pass
        raise
