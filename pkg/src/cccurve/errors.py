"""Exception types raised by the library."""


class CCCError(Exception):
    """Base class for all library errors."""


class ParseError(CCCError, ValueError):
    """Malformed input text (edge lists, descriptors, CSV files)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ConvergenceError(CCCError, RuntimeError):
    """An iterative solver did not reach its tolerance."""

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class DivergenceError(CCCError, ValueError):
    """Katz attenuation too large for the graph's spectral radius."""


class DegenerateSpectrumError(CCCError, ValueError):
    """Adjacency matrix has spectral radius zero (no cycles)."""


class GenerationError(CCCError, RuntimeError):
    """A random graph generator gave up."""


class KernelError(CCCError, ValueError):
    """A graphon kernel produced a value outside [0, 1]."""
