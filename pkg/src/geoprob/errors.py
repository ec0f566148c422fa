"""Exception hierarchy shared by every geoprob module."""


class GeoProbError(Exception):
    """Base class for all library errors."""


class DegenerateTriangle(GeoProbError, ValueError):
    """Raised when three vertices are (numerically) collinear."""


class NonConvergence(GeoProbError, RuntimeError):
    """Raised when a rejection loop exceeds its attempt cap."""


class DomainError(GeoProbError, ValueError):
    """Raised when an argument lies outside a function's domain."""


class InsufficientData(GeoProbError, ValueError):
    """Raised when a statistic is requested from too few observations."""


class NonFinite(GeoProbError, ValueError):
    """Raised when NaN or infinity is fed to an accumulator."""


class ConfigError(GeoProbError, ValueError):
    """Raised for an invalid experiment configuration."""
