"""Exception types shared across the package."""


class LayerFDError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(LayerFDError, ValueError):
    """Invalid problem, mesh, or solver configuration."""


class SingularCoefficientError(LayerFDError, ArithmeticError):
    """The convection coefficient vanishes where a division by it is required."""


class SingularSystemError(LayerFDError, ArithmeticError):
    """Tridiagonal elimination encountered a zero or near-zero pivot."""
