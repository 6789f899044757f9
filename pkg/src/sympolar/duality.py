"""Lagrangian polar duality, dual-pair verdicts and the shadow inclusion checks."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .ellipsoid import (
    PlaneEllipsoid,
    from_frame_form,
    lagrangian_projection,
    product_ball_form,
    to_frame_form,
)
from .errors import HypothesisNotMet
from .matops import as_spd, max_norm, psd_margin, spd_inv, spd_roots
from .symplectic import symplectic_eigenvalues

VERDICT_TOL = 1e-9
HYPOTHESIS_TOL = 1e-9


class DualStatus(str, enum.Enum):
    NOT_DUAL = "NotDual"
    DUAL = "Dual"
    EXACT_DUAL = "ExactDual"


@dataclass(frozen=True)
class DualPairVerdict:
    status: DualStatus
    margin: float
    exactness_residual: float

    @property
    def is_dual(self):
        return self.status is not DualStatus.NOT_DUAL


def lagrangian_polar_dual(x, pair):
    """Lagrangian polar dual of ``x`` (on ``pair.first``) inside ``pair.second``.

    The set {z' in l' : omega(z, z') <= 1 for all z in X}.  In frame
    coordinates omega(S(x,0), S(0,p)) = -x.p, and X is centrally symmetric,
    so the dual is the ordinary polar {A^-1 p.p <= 1}.
    """
    a = to_frame_form(x, pair, "first")
    return from_frame_form(spd_inv(a), pair, "second")


def classify_pair(a, b, tol=VERDICT_TOL):
    """Dual-pair verdict for frame-coordinate forms A (first) and B (second).

    (X_A, P_B) is a dual pair iff A^-1 >= B, i.e. B^-1 - A is PSD, and an
    exact pair iff AB = I.  The reported margin is min eig(B^-1 - A); the
    decision uses the same margin after rescaling to trace(A) = n, since
    the relation is invariant under A -> cA, B -> B/c.
    """
    a = as_spd(a)
    b = as_spd(b)
    margin = psd_margin(spd_inv(b) - a)
    c = a.shape[0] / np.trace(a)
    scaled = psd_margin(spd_inv(b / c) - c * a)
    residual = max_norm(a @ b - np.eye(a.shape[0]))
    if scaled < -tol:
        status = DualStatus.NOT_DUAL
    elif scaled <= tol and residual <= tol:
        status = DualStatus.EXACT_DUAL
    else:
        status = DualStatus.DUAL
    return DualPairVerdict(status, margin, residual)


def dual_pair_verdict(x, y, pair, tol=VERDICT_TOL):
    """Is (x, y) a Lagrangian dual pair, i.e. is the dual of x contained in y?"""
    return classify_pair(to_frame_form(x, pair, "first"), to_frame_form(y, pair, "second"), tol)


@dataclass(frozen=True)
class ProjectionCheck:
    verdict: DualPairVerdict
    inclusion_margin: float
    equality_residual: float
    first: PlaneEllipsoid
    second: PlaneEllipsoid


def contains_symplectic_ball(omega, tol=HYPOTHESIS_TOL):
    """Omega contains some S(B^2n(1)) iff every symplectic eigenvalue of M is <= 1."""
    return symplectic_eigenvalues(omega.m)[0] <= 1.0 + tol


def thm1_check(omega, pair):
    """Check that the two Lagrangian shadows of ``omega`` form a dual pair.

    Returns the inclusion margin, the smallest eigenvalue of
    (M/M_PP)^-1 - M/M_XX in frame coordinates (>= 0 means the dual of the
    first shadow sits inside the second), and the equality residual
    max|AB - I| of the two shadow forms.
    """
    lam = symplectic_eigenvalues(omega.m)[0]
    if lam > 1.0 + HYPOTHESIS_TOL:
        raise HypothesisNotMet(
            f"largest symplectic eigenvalue {lam:.12g} > 1: capacity {math.pi / lam:.12g} < pi"
        )
    first = lagrangian_projection(omega, pair, "first")
    second = lagrangian_projection(omega, pair, "second")
    a = to_frame_form(first, pair, "first")
    b = to_frame_form(second, pair, "second")
    inclusion = psd_margin(spd_inv(a) - b)
    residual = max_norm(a @ b - np.eye(pair.n))
    return ProjectionCheck(classify_pair(a, b), inclusion, residual, first, second)


def reconstruct_ball(x, pair):
    """The unique symplectic unit ball whose Lagrangian shadows are x and its dual.

    In frame coordinates this is A x.x + A^-1 p.p <= 1.
    """
    return product_ball_form(to_frame_form(x, pair, "first"), pair)


def product_capacity(a, b):
    """c_max of {A x.x <= 1} x {B p.p <= 1}: 4 sup{t > 0 : t X^o in P}.

    t X^o = {A^-1 p.p <= t^2} lies in P iff t^2 <= 1 / lambda_max(A^1/2 B A^1/2).
    """
    root, _ = spd_roots(a)
    b = as_spd(b)
    lam = np.linalg.eigvalsh(root @ b @ root)[-1]
    return 4.0 / math.sqrt(lam)


def is_symplectic_ball(omega, tol=1e-9):
    """True when every symplectic eigenvalue of the form is 1."""
    lam = symplectic_eigenvalues(omega.m)
    return bool(np.all(np.abs(lam - 1.0) <= tol))

