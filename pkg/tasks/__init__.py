# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

"""
Invoke entrypoint, import here all the tasks we want to make available
"""
import os
from invoke import Collection

from .test import (
    test,
    gradcheck,
    lint_licenses,
    lint_py,
    flake8
)

# the root namespace
ns = Collection()

# add single tasks to the root
ns.add_task(test)
ns.add_task(gradcheck)
ns.add_task(flake8)
ns.add_task(lint_py)
ns.add_task(lint_licenses)

ns.configure({
    'run': {
        'shell': os.environ.get('COMSPEC', os.environ.get('SHELL')),
        # set the encoding explicitly so invoke doesn't
        # freak out if a command outputs unicode chars.
        'encoding': 'utf-8',
    }
})
