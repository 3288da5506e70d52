"""Exception hierarchy shared across the package.

Three failure families, kept deliberately small so the command-line
driver can map them onto distinct exit codes:

DomainError     an argument is outside the physical/mathematical domain
                of an operation (negative acceleration, non-positive
                occupation, overflow-prone rapidity, ...).
ConfigError     a run configuration or input file is malformed.
NumericalError  an iterative procedure failed (no convergence, no
                interior heat-capacity maximum, flat spectrum).
"""

__all__ = ["DomainError", "ConfigError", "NumericalError"]


class DomainError(ValueError):
    """Argument outside the physical domain of an operation."""


class ConfigError(ValueError):
    """Malformed run configuration or input file."""


class NumericalError(RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""
