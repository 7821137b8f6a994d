"""Exception hierarchy shared across the package."""


class SpeedCloneError(Exception):
    """Base class for all package-specific errors."""


class DynamicsInputError(SpeedCloneError):
    """Raised when the dynamics step receives non-finite or out-of-range inputs."""


class ConfigurationError(SpeedCloneError):
    """Raised for inconsistent scenario/track/model configuration."""


class ConfigError(SpeedCloneError):
    """Raised when a config file cannot be parsed or contains unknown keys."""


class DataError(SpeedCloneError):
    """Raised when stored episode data is malformed or missing."""


class ModelIOError(SpeedCloneError):
    """Raised when a model file fails to load (truncation, shape mismatch)."""
