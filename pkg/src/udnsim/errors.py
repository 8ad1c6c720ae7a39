"""Exception types shared across the simulator."""


class ConfigError(ValueError):
    """Invalid scenario, parameter, or config-file content."""


class OutOfCoverageError(RuntimeError):
    """The requested serving gNB is not reachable from the TU position."""
