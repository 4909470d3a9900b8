# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from model.config import LAYER_NORM_EPS
from model.errors import ModelError, TrainingDivergence
from model.rope import rope_rotate

log = logging.getLogger(__name__)


GELU_C = np.sqrt(2.0 / np.pi)
GELU_K = 0.044715


@dataclass
class LayerTrace:
    h_in: np.ndarray
    xhat1: np.ndarray
    rstd1: np.ndarray
    n1: np.ndarray
    q: np.ndarray
    k: np.ndarray
    v: np.ndarray
    probs: np.ndarray
    ctx: np.ndarray
    xhat2: np.ndarray
    rstd2: np.ndarray
    n2: np.ndarray
    u: np.ndarray
    act: np.ndarray


@dataclass
class ForwardTrace:
    """ Activations kept by forward() for an exact backward pass. """
    tokens: np.ndarray
    positions: np.ndarray
    layers: List[LayerTrace] = field(default_factory=list)
    xhat_f: Optional[np.ndarray] = None
    rstd_f: Optional[np.ndarray] = None
    nf: Optional[np.ndarray] = None


def layer_norm(x, gain):
    mu = x.mean(axis=-1, keepdims=True)
    xc = x - mu
    rstd = 1.0 / np.sqrt((xc * xc).mean(axis=-1, keepdims=True) + LAYER_NORM_EPS)
    xhat = xc * rstd
    return xhat * gain, xhat, rstd


def layer_norm_backward(dy, xhat, rstd, gain):
    dgain = (dy * xhat).reshape(-1, xhat.shape[-1]).sum(axis=0)
    dxhat = dy * gain
    dx = rstd * (dxhat - dxhat.mean(axis=-1, keepdims=True) - xhat * (dxhat * xhat).mean(axis=-1, keepdims=True))
    return dx, dgain


def gelu(x):
    return 0.5 * x * (1.0 + np.tanh(GELU_C * (x + GELU_K * x ** 3)))


def gelu_backward(dy, x):
    t = np.tanh(GELU_C * (x + GELU_K * x ** 3))
    return dy * (0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * GELU_C * (1.0 + 3.0 * GELU_K * x * x))


def log_softmax(logits):
    shifted = logits - logits.max(axis=-1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=-1, keepdims=True))


def _split_heads(x, n_heads):
    b, t, d = x.shape
    return x.reshape(b, t, n_heads, d // n_heads).transpose(0, 2, 1, 3)


def _merge_heads(x):
    b, h, t, hd = x.shape
    return x.transpose(0, 2, 1, 3).reshape(b, t, h * hd)


def _causal_mask(t):
    return np.triu(np.ones((t, t), dtype=bool), k=1)


def _check_tokens(config, token_matrix):
    tokens = np.asarray(token_matrix)
    if tokens.ndim != 2:
        raise ModelError("token_matrix must be 2-dimensional, got shape {}".format(tokens.shape))
    if tokens.shape[1] > config.context_length:
        raise ModelError("sequence of {} exceeds context_length {}".format(tokens.shape[1], config.context_length))
    if tokens.size and (tokens.min() < 0 or tokens.max() >= config.vocab_size):
        raise ModelError("token id out of range for vocab_size {}".format(config.vocab_size))
    return tokens.astype(np.int64)


def _masked_positions(loss_mask, shape):
    mask = np.asarray(loss_mask, dtype=bool)
    if mask.shape != shape:
        raise ModelError("loss_mask shape {} does not match tokens {}".format(mask.shape, shape))
    # the last column has no next token
    scored = mask[:, :-1]
    if not scored.any():
        raise ModelError("loss_mask selects no positions")
    return scored


def forward(params, token_matrix, loss_mask=None, keep_trace=True):
    """
    Causal forward pass. Returns (logits, mean_nll, trace); mean_nll is the
    average next-token loss over loss_mask positions, or None without a
    mask, and trace is None when keep_trace is False.
    """
    config = params.config
    tokens = _check_tokens(config, token_matrix)
    batch, seq = tokens.shape
    positions = np.arange(seq)
    scale = 1.0 / np.sqrt(config.head_dim)
    mask = _causal_mask(seq)

    trace = ForwardTrace(tokens=tokens, positions=positions) if keep_trace else None
    h = params['embed'][tokens]

    for layer in range(config.depth):
        p = 'layers.{}.'.format(layer)
        n1, xhat1, rstd1 = layer_norm(h, params[p + 'ln1.gain'])
        q = rope_rotate(_split_heads(n1 @ params[p + 'attn.wq'], config.n_heads), positions)
        k = rope_rotate(_split_heads(n1 @ params[p + 'attn.wk'], config.n_heads), positions)
        v = _split_heads(n1 @ params[p + 'attn.wv'], config.n_heads)

        scores = (q @ k.transpose(0, 1, 3, 2)) * scale
        scores = np.where(mask, -np.inf, scores)
        scores = scores - scores.max(axis=-1, keepdims=True)
        probs = np.exp(scores)
        probs /= probs.sum(axis=-1, keepdims=True)
        ctx = _merge_heads(probs @ v)
        h_mid = h + ctx @ params[p + 'attn.wo']

        n2, xhat2, rstd2 = layer_norm(h_mid, params[p + 'ln2.gain'])
        u = n2 @ params[p + 'mlp.w_in']
        act = gelu(u)

        if keep_trace:
            trace.layers.append(LayerTrace(
                h_in=h, xhat1=xhat1, rstd1=rstd1, n1=n1, q=q, k=k, v=v, probs=probs, ctx=ctx,
                xhat2=xhat2, rstd2=rstd2, n2=n2, u=u, act=act))
        h = h_mid + act @ params[p + 'mlp.w_out']

    nf, xhat_f, rstd_f = layer_norm(h, params['ln_f.gain'])
    logits = nf @ params['unembed']
    if keep_trace:
        trace.xhat_f, trace.rstd_f, trace.nf = xhat_f, rstd_f, nf

    mean_nll = None
    if loss_mask is not None:
        scored = _masked_positions(loss_mask, tokens.shape)
        logp = log_softmax(logits[:, :-1])
        target_logp = np.take_along_axis(logp, tokens[:, 1:, None], axis=-1)[..., 0]
        mean_nll = float(-target_logp[scored].mean())

    return logits, mean_nll, trace


def nll_gradient(logits, tokens, loss_mask):
    """ d mean_nll / d logits for next-token targets under loss_mask. """
    scored = _masked_positions(loss_mask, tokens.shape)
    dlogits = np.zeros_like(logits)
    probs = np.exp(log_softmax(logits[:, :-1]))
    np.put_along_axis(probs, tokens[:, 1:, None], np.take_along_axis(probs, tokens[:, 1:, None], axis=-1) - 1.0,
                      axis=-1)
    dlogits[:, :-1] = probs * (scored[..., None] / scored.sum())
    return dlogits


def backward(params, trace, dlogits):
    """ Gradients of every parameter tensor given d loss / d logits. """
    config = params.config
    grads = params.zeros_like()
    scale = 1.0 / np.sqrt(config.head_dim)
    d = config.hidden_dim

    flat = dlogits.reshape(-1, dlogits.shape[-1])
    grads['unembed'] = trace.nf.reshape(-1, d).T @ flat
    dnf = dlogits @ params['unembed'].T
    dh, grads['ln_f.gain'] = layer_norm_backward(dnf, trace.xhat_f, trace.rstd_f, params['ln_f.gain'])

    for layer in reversed(range(config.depth)):
        p = 'layers.{}.'.format(layer)
        lt = trace.layers[layer]

        # feed-forward residual branch
        grads[p + 'mlp.w_out'] = lt.act.reshape(-1, config.mlp_dim).T @ dh.reshape(-1, d)
        du = gelu_backward(dh @ params[p + 'mlp.w_out'].T, lt.u)
        grads[p + 'mlp.w_in'] = lt.n2.reshape(-1, d).T @ du.reshape(-1, config.mlp_dim)
        dx, grads[p + 'ln2.gain'] = layer_norm_backward(du @ params[p + 'mlp.w_in'].T, lt.xhat2, lt.rstd2,
                                                        params[p + 'ln2.gain'])
        dh = dh + dx

        # attention residual branch
        grads[p + 'attn.wo'] = lt.ctx.reshape(-1, d).T @ dh.reshape(-1, d)
        dctx = _split_heads(dh @ params[p + 'attn.wo'].T, config.n_heads)
        dprobs = dctx @ lt.v.transpose(0, 1, 3, 2)
        dv = lt.probs.transpose(0, 1, 3, 2) @ dctx
        dscores = lt.probs * (dprobs - (dprobs * lt.probs).sum(axis=-1, keepdims=True)) * scale
        dq = rope_rotate(dscores @ lt.k, trace.positions, inverse=True)
        dk = rope_rotate(dscores.transpose(0, 1, 3, 2) @ lt.q, trace.positions, inverse=True)

        dn1 = np.zeros_like(lt.n1)
        n1_flat = lt.n1.reshape(-1, d)
        for name, dproj in (('wq', dq), ('wk', dk), ('wv', dv)):
            dproj = _merge_heads(dproj)
            grads[p + 'attn.' + name] = n1_flat.T @ dproj.reshape(-1, d)
            dn1 += dproj @ params[p + 'attn.' + name].T
        dx, grads[p + 'ln1.gain'] = layer_norm_backward(dn1, lt.xhat1, lt.rstd1, params[p + 'ln1.gain'])
        dh = dh + dx

    np.add.at(grads['embed'], trace.tokens, dh)
    return OrderedDict((name, g.astype(params[name].dtype, copy=False)) for name, g in grads.items())


def loss_and_grad(params, batch):
    """ (mean_nll, gradients) on a PackedBatch-like object with token_matrix and loss_mask. """
    logits, loss, trace = forward(params, batch.token_matrix, batch.loss_mask)
    if not np.isfinite(loss):
        raise TrainingDivergence("non-finite training loss: {}".format(loss))

    grads = backward(params, trace, nll_gradient(logits, trace.tokens, batch.loss_mask))
    if not all(np.isfinite(g).all() for g in grads.values()):
        raise TrainingDivergence("non-finite gradients at loss {}".format(loss))
    return loss, grads
