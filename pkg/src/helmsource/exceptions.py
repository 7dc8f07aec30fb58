"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid configuration: unknown profile, bad geometry, malformed config file."""


class DegenerateReconstructionError(RuntimeError):
    """Every mode of a reconstruction is degenerate; no coefficient can be recovered."""
