"""
Exception hierarchy for pa_net.
Every failure the library raises on purpose derives from PANetError so the
orchestrator can turn it into a diagnostic and a non-zero exit code.
"""


class PANetError(Exception):
    """Base class for all pa_net errors."""


class ConfigError(PANetError):
    """Invalid environment or run configuration."""


class InvalidParameterError(PANetError, ValueError):
    """A model or estimator argument is outside its domain."""


class NodeIdError(PANetError, IndexError):
    """Node id outside 1..node_count."""


class InfeasibleInversionError(PANetError, ValueError):
    """Tail indices invert to a non-positive offset."""

    def __init__(self, message: str, iota_in: float, iota_out: float, p: float):
        super().__init__(message)
        self.iota_in = iota_in
        self.iota_out = iota_out
        self.p = p


class UndefinedEstimateError(PANetError, ValueError):
    """Hill estimate undefined (all top order statistics tied) or no usable k."""


class DegenerateSampleError(PANetError, ValueError):
    """Sample too small or constant for the requested estimate."""


class EdgeListParseError(PANetError):
    """Edge list contained no parseable data lines."""

    def __init__(self, message: str, malformed=None):
        super().__init__(message)
        self.malformed = list(malformed or [])


class MissingTimestampError(PANetError):
    """A temporal operation was requested on a log without timestamps."""


class EnumerationLimitError(PANetError):
    """Exact enumeration requested beyond the configured step cap."""


class TraceTooShortError(PANetError):
    """Simulation trace too short for a growth-rate fit."""


class QuadratureError(PANetError, ArithmeticError):
    """Numerical integration failed to reach the requested tolerance."""
