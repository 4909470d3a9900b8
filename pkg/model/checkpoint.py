# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import json
import logging
import struct
from collections import OrderedDict

import numpy as np

from model.config import ModelConfig
from model.errors import CheckpointError, ModelError
from model.params import Params
from utils.util import atomic_write

log = logging.getLogger(__name__)


MAGIC = b'DSCK'
FORMAT_VERSION = 1
PREAMBLE = struct.Struct('<4sII')


def dumps(params, seed, extra=None):
    """
    Serialize to the flat binary layout: magic, uint32 version, uint32
    header length, JSON header, then every tensor little-endian in order.
    """
    tensors = []
    chunks = []
    for name, tensor in params.items():
        data = np.ascontiguousarray(tensor, dtype=tensor.dtype.newbyteorder('<'))
        tensors.append([name, tensor.dtype.name, list(tensor.shape)])
        chunks.append(data.tobytes())

    header = {
        'format_version': FORMAT_VERSION,
        'config': params.config.as_dict(),
        'seed': seed,
        'tensors': tensors,
    }
    if extra:
        header['extra'] = extra
    header_bytes = json.dumps(header, sort_keys=True).encode('utf-8')
    return PREAMBLE.pack(MAGIC, FORMAT_VERSION, len(header_bytes)) + header_bytes + b''.join(chunks)


def loads(blob):
    """ Returns (params, header). """
    if len(blob) < PREAMBLE.size:
        raise CheckpointError("checkpoint truncated before its header")
    magic, version, header_len = PREAMBLE.unpack_from(blob)
    if magic != MAGIC:
        raise CheckpointError("not a checkpoint (magic {!r})".format(magic))
    if version != FORMAT_VERSION:
        raise CheckpointError("unsupported checkpoint version {}".format(version))

    offset = PREAMBLE.size
    try:
        header = json.loads(blob[offset:offset + header_len].decode('utf-8'))
        config = ModelConfig.from_dict(header['config'])
    except (ValueError, KeyError, ModelError) as e:
        raise CheckpointError("unreadable checkpoint header: {}".format(e))
    offset += header_len

    tensors = OrderedDict()
    for name, dtype, shape in header['tensors']:
        dtype = np.dtype(dtype).newbyteorder('<')
        nbytes = dtype.itemsize * int(np.prod(shape, dtype=np.int64))
        if offset + nbytes > len(blob):
            raise CheckpointError("checkpoint truncated in tensor {}".format(name))
        tensors[name] = np.frombuffer(blob, dtype=dtype, count=nbytes // dtype.itemsize, offset=offset) \
            .reshape(shape).astype(dtype.newbyteorder('='))
        offset += nbytes
    if offset != len(blob):
        raise CheckpointError("{} trailing bytes after the last tensor".format(len(blob) - offset))

    try:
        params = Params(config, tensors)
    except ModelError as e:
        raise CheckpointError(str(e))
    return params, header


def save_checkpoint(path, params, seed, extra=None):
    atomic_write(path, dumps(params, seed, extra))
    log.debug("wrote checkpoint %s (%d parameters)", path, params.count)


def load_checkpoint(path):
    try:
        with open(path, 'rb') as f:
            blob = f.read()
    except IOError as e:
        raise CheckpointError("unable to read checkpoint {}: {}".format(path, e))
    return loads(blob)
