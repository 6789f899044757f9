"""Exception hierarchy shared by every sympolar module."""


class SympolarError(Exception):
    """Base class for all errors raised by sympolar."""


class BadShape(SympolarError, ValueError):
    """An array has the wrong shape for the requested operation."""


class NotSymmetric(SympolarError, ValueError):
    """A matrix is asymmetric beyond the construction tolerance."""


class NotPositiveDefinite(SympolarError, ValueError):
    """A matrix that must be positive definite is not."""

    def __init__(self, message, min_eig=None):
        super().__init__(message)
        self.min_eig = min_eig


class SingularMatrix(SympolarError, ValueError):
    pass


class NumericalFailure(SympolarError, ArithmeticError):
    """An iterative kernel failed to converge or the input is too ill-conditioned."""


class NotIsotropic(SympolarError, ValueError):
    """A subspace on which the symplectic form does not vanish."""


class RankDeficient(SympolarError, ValueError):
    pass


class ConstraintViolated(SympolarError, ValueError):
    pass


class NotTransverse(SympolarError, ValueError):
    """Two Lagrangian planes intersect non-trivially."""


class PlaneMismatch(SympolarError, ValueError):
    """A plane ellipsoid does not live on the plane the operation expects."""


class HypothesisNotMet(SympolarError, ValueError):
    """The ellipsoid does not contain a symplectic unit ball."""


class InternalInconsistency(SympolarError, RuntimeError):
    """Two independent computational routes disagree."""


class GridWarning(UserWarning):
    """A quadrature grid is too narrow for the integrand's decay."""
