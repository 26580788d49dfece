"""Exception types shared across the package."""


class ZetalabError(Exception):
    """Base class for package-specific errors."""


class PoleError(ZetalabError):
    """Evaluation requested at (or across) a pole."""

    def __init__(self, message, residue=None):
        super().__init__(message)
        self.residue = residue


class GridMismatchError(ZetalabError):
    """Two function grids do not share the same region and sample points."""


class ContourError(ZetalabError):
    """A derivative contour is invalid (too large, or it encloses a pole)."""


class SpecCoverageError(ZetalabError):
    """An Euler-product spec does not cover enough primes for the request."""


class CutoffError(ZetalabError):
    """A torus point does not carry the coordinate that was asked for."""


class DomainError(ZetalabError):
    """Evaluation requested outside the supported domain."""


class TargetError(ZetalabError):
    """A scan target violates its admissibility requirements."""


class ConfigError(ZetalabError):
    """An experiment configuration is invalid.

    ``pointer`` is a JSON-pointer-style path naming the offending field.
    """

    def __init__(self, pointer, message):
        super().__init__(f"{pointer}: {message}")
        self.pointer = pointer


class StaleCheckpointError(ZetalabError):
    """A checkpoint on disk does not match the current configuration."""
