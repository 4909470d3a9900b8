# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

import signal
import pytest

from utils.signals import SignalHandler


@pytest.fixture
def signal_handler(request):
    handler = SignalHandler()
    handler.handle(signal.SIGUSR1)

    request.addfinalizer(handler.restore)
    return handler
