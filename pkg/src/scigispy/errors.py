"""Exception hierarchy shared across the package.

DataError covers malformed or unusable input files; ConfigError covers
invalid run configuration (missing resources, unknown presets).  The CLI
maps them to exit codes 1 and 2 respectively.
"""


class ScigispyError(Exception):
    pass


class DataError(ScigispyError):
    """Bad input data: parse failures, missing fields, empty corpora."""


class ConfigError(ScigispyError):
    """Bad run configuration: unknown preset, missing required resource."""
