# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
import time
from collections import OrderedDict

import numpy as np

from metrics import MetricNames, evaluate, exact_match
from model import (
    ARCHITECTURE, ModelError, TrainingDivergence,
    init_params, loss_and_grad, param_count, save_checkpoint, scale_label,
)
from taskgen import build_eval_set, pack_batch, vocab_for
from trainer.optimizer import MomentState, optimizer_step
from trainer.record import RunRecord, RunStatus
from trainer.schedule import lr_at

log = logging.getLogger(__name__)


SEED_SPLIT = 'numpy.SeedSequence(seed).spawn(2) -> (init, data)'


def split_seed(seed):
    """ Derive independent (init_seed, data_seed) from one run seed. """
    init_seq, data_seq = np.random.SeedSequence(seed).spawn(2)
    return int(init_seq.generate_state(1)[0]), int(data_seq.generate_state(1)[0])


def build_eval_sets(train_config, vocab):
    """
    One eval set per length, drawn from eval_seed alone so that every run
    of a sweep is scored on the same examples.
    """
    eval_sets = OrderedDict()
    for length in sorted(set(train_config.eval_lengths)):
        rng = np.random.default_rng([train_config.eval_seed, length])
        eval_sets[length] = build_eval_set(
            train_config.task_kind, length, train_config.eval_items, rng,
            count_mode=train_config.count_eval_mode, max_eval_digits=train_config.max_eval_digits)
    return eval_sets


class Trainer(object):
    """ Trains one model on one task at one scale point and scores it. """

    def __init__(self, model_config, train_config, checkpoint_path=None, stop_event=None):
        self.model_config = model_config
        self.train_config = train_config
        self.checkpoint_path = checkpoint_path
        self.stop_event = stop_event

        self.vocab = vocab_for(train_config.task_kind, train_config.max_eval_digits)
        if model_config.vocab_size != self.vocab.size:
            raise ModelError("model vocab_size {} does not match the {} vocabulary ({})".format(
                model_config.vocab_size, train_config.task_kind, self.vocab.size))
        if model_config.context_length < train_config.context_length:
            raise ModelError("model context_length {} is shorter than the training context {}".format(
                model_config.context_length, train_config.context_length))

        self.init_seed, self.data_seed = split_seed(train_config.seed)
        self.params = None
        self.train_loss_trace = []
        self.eval_trace = []

    def _record(self, **kwargs):
        return RunRecord(
            task_kind=self.train_config.task_kind,
            seed=self.train_config.seed,
            model_config=self.model_config.as_dict(),
            train_config=self.train_config.as_dict(),
            scale_label=scale_label(self.model_config),
            param_count=param_count(self.model_config),
            architecture=dict(ARCHITECTURE, warmup_steps=0, schedule=self.train_config.schedule,
                              seed_split=SEED_SPLIT),
            train_loss_trace=self.train_loss_trace,
            eval_trace=self.eval_trace,
            **kwargs
        )

    def _periodic_eval(self, step, eval_sets):
        em = OrderedDict((length, exact_match(self.params, examples, self.vocab.sep_id))
                         for length, examples in eval_sets.items())
        self.eval_trace.append({'step': step, 'em': em})
        log.debug("step %d: em %s", step, dict(em))
        return em

    def train(self, eval_sets):
        config = self.train_config
        self.params = init_params(self.model_config, self.init_seed)
        state = MomentState.zeros(self.params)
        data_rng = np.random.default_rng(self.data_seed)
        in_distribution = config.in_distribution_length
        if config.early_stop and in_distribution not in eval_sets:
            eval_sets = OrderedDict(eval_sets)
            eval_sets[in_distribution] = build_eval_set(
                config.task_kind, in_distribution, config.eval_items,
                np.random.default_rng([config.eval_seed, in_distribution]),
                count_mode=config.count_eval_mode, max_eval_digits=config.max_eval_digits)

        perfect_since = None
        loss = None
        for step in range(config.steps):
            if self.stop_event is not None and self.stop_event.is_set():
                raise InterruptedError("training interrupted at step {}".format(step))

            batch = pack_batch(data_rng, config.task_kind, (config.min_train_length, config.max_train_length),
                               config.context_length, config.batch_size, max_eval_digits=config.max_eval_digits)
            loss, grads = loss_and_grad(self.params, batch)
            optimizer_step(self.params, grads, state, step, config, lr=lr_at(step, config))

            if step % config.log_every == 0 or step == config.steps - 1:
                self.train_loss_trace.append([step, loss])
                log.debug("step %d: loss %.5f", step, loss)

            if config.eval_every and (step + 1) % config.eval_every == 0:
                em = self._periodic_eval(step + 1, eval_sets)
                if config.early_stop:
                    if em[in_distribution] == 1.0:
                        perfect_since = step + 1 if perfect_since is None else perfect_since
                        if step + 1 - perfect_since >= config.early_stop_window:
                            log.info("early stop at step %d: in-distribution EM held at 1.0", step + 1)
                            break
                    else:
                        perfect_since = None

        if not self.params.all_finite():
            raise TrainingDivergence("parameters stopped being finite")
        return loss

    def score(self, eval_sets):
        results = OrderedDict((name, OrderedDict()) for name in MetricNames.EVAL)
        for length in self.train_config.eval_lengths:
            scores = evaluate(self.params, eval_sets[length], self.vocab.sep_id,
                              answer_only=self.train_config.answer_only)
            for name, value in scores.items():
                results[name][length] = value
        return results

    def run(self):
        start = time.time()
        log.info("run %s seed %d started", scale_label(self.model_config), self.train_config.seed)
        eval_sets = build_eval_sets(self.train_config, self.vocab)
        try:
            final_loss = self.train(eval_sets)
            metrics = self.score(eval_sets)
        except TrainingDivergence as e:
            log.warning("run %s seed %d diverged: %s", scale_label(self.model_config), self.train_config.seed, e)
            return self._record(status=RunStatus.FAILED, error=str(e), wall_time=time.time() - start)

        if self.train_config.checkpoint and self.checkpoint_path:
            save_checkpoint(self.checkpoint_path, self.params, self.train_config.seed,
                            extra={'scale_label': scale_label(self.model_config)})

        record = self._record(metrics=metrics, final_train_loss=final_loss, wall_time=time.time() - start)
        log.info("run %s seed %d finished in %.1fs", record.scale_label, record.seed, record.wall_time)
        return record


def train_run(model_config, train_config, checkpoint_path=None, stop_event=None):
    return Trainer(model_config, train_config, checkpoint_path=checkpoint_path, stop_event=stop_event).run()
