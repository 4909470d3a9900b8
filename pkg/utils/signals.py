# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.

# stdlib
import logging
import signal
from collections import OrderedDict

log = logging.getLogger(__name__)


class SignalHandler(object):
    """
    Stops registered components when one of the handled signals arrives.

    Handlers are installed from the main thread; the orchestrator polls its
    queues with a timeout, so a stop() issued from the handler is picked up
    within one poll interval.
    """

    def __init__(self, components={}):
        # we don't care about order for initial components, if any
        self._components = OrderedDict(components)
        self._original_handlers = {}
        self._received = []

    def register(self, identifier, component):
        if identifier in self._components:
            raise KeyError("component ({}) already registered".format(identifier))

        self._components[identifier] = component

    def unregister(self, identifier):
        self._components.pop(identifier)

    @property
    def received(self):
        return list(self._received)

    def handle(self, signum):
        if signum not in list(range(1, signal.NSIG)):
            raise ValueError('Invalid signal specified')

        self._original_handlers[signum] = signal.getsignal(signum)
        signal.signal(signum, self._signal_handler)

    def unhandle(self, signum):
        if signum not in self._original_handlers:
            raise ValueError('Signal not handled: {}'.format(signum))

        original_handler = self._original_handlers.pop(signum)
        signal.signal(signum, original_handler)

    def restore(self):
        for signum in list(self._original_handlers):
            self.unhandle(signum)

    def _signal_handler(self, signum, frame):
        log.warning("Signal %s received, stopping", signum)
        self._received.append(signum)
        for identifier, component in self._components.items():
            log.info("Stopping %s", identifier)
            try:
                component.stop()
            except AttributeError:
                log.error("Registered component does not implement stop(): %s", identifier)
