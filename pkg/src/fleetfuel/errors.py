"""Error taxonomy shared across the pipeline.

Three classes so the CLI can map failures to distinct exit codes:
configuration problems, bad or insufficient input data, and everything
else (internal bugs).
"""


class FleetFuelError(Exception):
    """Base class for all package errors."""


class ConfigError(FleetFuelError):
    """Invalid or inconsistent configuration (exit code 2)."""


class DataError(FleetFuelError):
    """Unusable input data: missing files, empty results, schema violations (exit code 3)."""


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4
