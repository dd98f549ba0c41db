"""Exception hierarchy shared across the package.

Exit codes used by the CLI: 2 config/parameter errors, 3 data errors,
4 numeric errors.
"""


class HonestBandsError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class ParameterError(HonestBandsError, ValueError):
    """Invalid parameter or configuration value."""

    exit_code = 2


class ConfigError(ParameterError):
    """Malformed or inconsistent run configuration."""

    exit_code = 2


class DataError(HonestBandsError, ValueError):
    """Malformed input data (CSV parse failures, dimension mismatches)."""

    exit_code = 3


class DomainError(DataError):
    """Evaluation point outside the declared basis domain."""

    exit_code = 3


class NumericError(HonestBandsError, ArithmeticError):
    """Numerical failure (non-PSD covariance, unusable surface)."""

    exit_code = 4


class DegenerateSurfaceError(NumericError):
    """No usable (x, l) cells remain after degeneracy filtering."""

    exit_code = 4
