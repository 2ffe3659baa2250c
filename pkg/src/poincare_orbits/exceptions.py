"""Exception types raised by the library."""


class PoincareError(ValueError):
    """Base class for every domain error raised by this package."""


class VelocityOutOfRange(PoincareError):
    """A boost velocity reached or exceeded the speed of light."""


class DegenerateOrbit(PoincareError):
    """The central moment ``f`` is zero, so the Darboux chart is undefined."""


class GalileanRegime(PoincareError):
    """An operation that needs a finite speed of light got ``c = inf``."""


class InvalidGrid(PoincareError):
    """A grid of ``c`` values is not strictly increasing or not admissible."""
