# Unless explicitly stated otherwise all files in this repository are licensed
# under the Apache License Version 2.0.
# Copyright 2026 distscale authors.


class AnalysisError(Exception):
    pass


class BootstrapError(AnalysisError):
    pass
