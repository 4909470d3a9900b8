# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import json
import hashlib


def freeze(o):
    """
    Turn nested dicts, lists and tuples into a canonical, JSON-able structure:
    dict keys sorted, tuples as lists. Numpy scalars become plain numbers.
    """
    if isinstance(o, dict):
        return {str(k): freeze(v) for k, v in sorted(o.items(), key=lambda kv: str(kv[0]))}

    if isinstance(o, (list, tuple)):
        return [freeze(v) for v in o]

    if hasattr(o, 'item') and callable(o.item):
        return o.item()

    return o


def hash_mutable(m):
    """
    Stable hex digest of a mutable structure. Unlike the builtin hash() it
    does not change between interpreter runs, so it can guard files on disk.
    """
    canonical = json.dumps(freeze(m), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()
