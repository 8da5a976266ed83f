"""Exception types shared across the package."""


class MockqError(Exception):
    pass


class GridError(MockqError):
    """An exponent fell off the 1/24 lattice."""


class PoleError(MockqError):
    """A bilateral sum hit a vanishing denominator."""


class NonInvertibleError(MockqError):
    """Series inversion attempted on a series with zero leading coefficient."""


class PrecisionError(MockqError):
    """A coefficient beyond the guaranteed precision window was requested."""


class ThetaVanishesError(MockqError):
    """A theta denominator is identically zero at the requested specialization."""


class ConvergenceError(MockqError):
    """A numeric series or quadrature failed to reach its target accuracy."""
