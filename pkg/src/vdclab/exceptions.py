"""Exception types raised by the verification routines."""


class VdcError(Exception):
    """Base class for library errors."""


class QuadratureError(VdcError):
    """Adaptive quadrature hit its depth cap or panel budget."""


class PreconditionError(VdcError, ValueError):
    """A grid spot-check of a caller-asserted hypothesis failed."""


class VerificationError(VdcError):
    """A constructive search found no witness at maximum resolution."""
