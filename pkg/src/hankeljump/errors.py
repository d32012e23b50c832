"""Exception types shared across the package."""


class HankelJumpError(Exception):
    """Base class for all package errors."""


class ZeroPoint(HankelJumpError):
    """The origin has no representative on the punctured covering."""


class PoleError(HankelJumpError):
    """Evaluation requested at a pole of a Gamma-type factor."""


class DomainError(HankelJumpError):
    """Argument outside the operation's domain of validity."""


class SeriesDivergence(HankelJumpError):
    """Series evaluator asked for an argument beyond its trust radius."""


class QuadratureFailure(HankelJumpError):
    """Adaptive quadrature could not certify the requested tolerance."""


class OutOfSector(HankelJumpError):
    """Covering argument outside the sector where an expansion is valid."""


class DivergentTail(HankelJumpError):
    """Truncated asymptotic series has a growing tail at this argument."""


class OnCutError(HankelJumpError):
    """Value lies on a jump contour; request a one-sided limit instead."""


class SectorMismatch(HankelJumpError):
    """Point does not lie in the sector named by the caller."""


class BetaZero(HankelJumpError):
    """Formula is stated for a nonzero jump exponent only."""


class DegeneratePivot(HankelJumpError):
    """A norm h_j vanished within certified precision.

    Signals a parameter in the exceptional set where the low-degree
    orthogonal polynomial system fails to exist.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"degenerate pivot h_{index}")


class StencilFailure(HankelJumpError):
    """A finite-difference stencil point could not be evaluated."""


class PrecisionValidationError(HankelJumpError):
    """Base run and doubled-precision rerun disagree beyond tolerance."""


class UsageError(HankelJumpError):
    """Invalid command line or configuration file."""
