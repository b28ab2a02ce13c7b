class ClockLabError(Exception):
    """Base class for every error raised by the clock laboratory"""


class IndexRangeError(ClockLabError, IndexError):
    """Click index outside the truncated grid"""


class StateInputError(ClockLabError, ValueError):
    """Malformed state input: duplicate index, zero state, grid mismatch"""


class WindowError(ClockLabError, ValueError):
    """Window offset u (or a finite-difference probe) outside [-tau/2, +tau/2]"""


class ModelError(ClockLabError, ValueError):
    """Clock model construction violates the model invariants"""


class ConfigurationError(ClockLabError, ValueError):
    """Invalid grid, model parameters or run configuration"""


class GridTooSmallError(ConfigurationError):
    """Theorem checks refuse boundary-dominated grids"""


class NumericsError(ClockLabError, ArithmeticError):
    """Non-finite samples or unconverged quadrature"""
