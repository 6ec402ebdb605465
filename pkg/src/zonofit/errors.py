"""Exception types shared across the package."""


class ZonofitError(Exception):
    """Base class for all zonofit errors."""


class ParameterError(ZonofitError):
    """Invalid parameters or malformed input data."""


class SymmetryError(ParameterError):
    """A polygon that is not centrally symmetric where symmetry is required."""


class SolverError(ZonofitError):
    """Numeric failure: singular or unacceptably ill-conditioned system."""


class UnderdeterminedError(ZonofitError):
    """Not enough observations to determine the requested moments."""
