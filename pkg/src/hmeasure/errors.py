"""Exception types shared across the package."""


class HMeasureError(Exception):
    """Base class for all errors raised by this package."""


class DataError(HMeasureError, ValueError):
    """Input data violates a precondition (bad label, non-finite score, empty class)."""


class ConfigError(HMeasureError, ValueError):
    """Inconsistent or out-of-range evaluation settings."""
