"""Lagrangian planes and symplectic frames adapted to transverse pairs."""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.linalg

from .errors import BadShape, ConstraintViolated, NotIsotropic, NotTransverse, RankDeficient
from .matops import max_norm
from .symplectic import SymplecticMatrix, standard_j

ISOTROPY_TOL = 1e-10
RANK_TOL = 1e-10
TRANSVERSE_TOL = 1e-10
ANGLE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class LagrangianPlane:
    """An n-dimensional subspace of R^2n on which omega vanishes.

    ``basis`` is a 2n x n matrix with orthonormal columns.
    """

    basis: np.ndarray

    @property
    def n(self):
        return self.basis.shape[1]

    def contains(self, z, tol=ANGLE_TOL):
        z = np.asarray(z, dtype=float)
        resid = z - self.basis @ (self.basis.T @ z)
        return np.linalg.norm(resid) <= tol * max(1.0, np.linalg.norm(z))

    def same_as(self, other, tol=ANGLE_TOL):
        return plane_distance(self, other) <= tol

    def coords(self, z):
        """Coordinates of points of the plane in the stored orthonormal basis."""
        return self.basis.T @ np.asarray(z, dtype=float)


def plane_distance(a, b):
    """Largest principal angle between two planes (radians)."""
    if a.n != b.n:
        raise BadShape("planes of different dimensions")
    return float(np.max(scipy.linalg.subspace_angles(a.basis, b.basis)))


def plane_from_basis(b):
    """Validate a 2n x n basis and return the plane with an orthonormalized basis."""
    b = np.asarray(b, dtype=float)
    if b.ndim == 1:
        b = b[:, None]
    if b.ndim != 2 or b.shape[0] != 2 * b.shape[1]:
        raise BadShape(f"expected a 2n x n basis, got shape {b.shape}")
    n = b.shape[1]
    sv = np.linalg.svd(b, compute_uv=False)
    if sv[-1] <= RANK_TOL * max(sv[0], np.finfo(float).tiny):
        raise RankDeficient(f"basis has rank < {n} (smallest singular value {sv[-1]:.3e})")
    q, r = np.linalg.qr(b)
    # sign-canonical QR so an already orthonormal basis is returned unchanged
    q = q * np.where(np.diag(r) < 0, -1.0, 1.0)
    gram = q.T @ standard_j(n) @ q
    if max_norm(gram) > ISOTROPY_TOL:
        raise NotIsotropic(f"omega does not vanish on the span (max |omega| = {max_norm(gram):.3e})")
    return LagrangianPlane(q)


def coordinate_plane(n, which):
    """``"X"`` gives l_X = R^n x 0, ``"P"`` gives l_P = 0 x R^n."""
    eye = np.eye(2 * n)
    if which.upper() == "X":
        return LagrangianPlane(eye[:, :n].copy())
    if which.upper() == "P":
        return LagrangianPlane(eye[:, n:].copy())
    raise ValueError(f"which must be 'X' or 'P', not {which!r}")


def plane_from_ab(a, b, tol=1e-9):
    """The plane {(x, p) : A x + B p = 0}.

    Requires A^T B symmetric and A^T A + B^T B = I; the plane is then
    parametrized by x = B^T u, p = -A^T u.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    b = np.atleast_2d(np.asarray(b, dtype=float))
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise BadShape(f"A and B must be matching square matrices, got {a.shape}, {b.shape}")
    n = a.shape[0]
    sym = a.T @ b
    if max_norm(sym - sym.T) > tol:
        raise ConstraintViolated("A^T B is not symmetric")
    if max_norm(a.T @ a + b.T @ b - np.eye(n)) > tol:
        raise ConstraintViolated("A^T A + B^T B != I")
    return plane_from_basis(np.vstack([b.T, -a.T]))


def is_transverse(l1, l2):
    """Return ``(verdict, |det [B1 | B2]|)`` for orthonormal bases B1, B2."""
    if l1.n != l2.n:
        raise BadShape("planes of different dimensions")
    margin = abs(float(np.linalg.det(np.hstack([l1.basis, l2.basis]))))
    return margin > TRANSVERSE_TOL, margin


def frame_symplectic(l1, l2):
    """Symplectic S with S(l_X) = l1 and S(l_P) = l2.

    Takes the orthonormal bases E, F, forms the Gram matrix G = E^T J F
    (invertible by transversality) and returns S = [E | F G^-1], so that
    E^T J F' = I, which is exactly the off-diagonal block of S^T J S = J.
    """
    ok, margin = is_transverse(l1, l2)
    if not ok:
        raise NotTransverse(f"planes are not transverse (|det| = {margin:.3e})")
    e, f = l1.basis, l2.basis
    gram = e.T @ standard_j(l1.n) @ f
    return SymplecticMatrix.validate(np.hstack([e, f @ np.linalg.inv(gram)]))


@dataclass(frozen=True, eq=False)
class TransversePair:
    first: LagrangianPlane
    second: LagrangianPlane
    _frame: SymplecticMatrix = field(default=None, repr=False)

    def __post_init__(self):
        ok, margin = is_transverse(self.first, self.second)
        if not ok:
            raise NotTransverse(f"planes are not transverse (|det| = {margin:.3e})")

    @classmethod
    def coordinate(cls, n):
        return cls(coordinate_plane(n, "X"), coordinate_plane(n, "P"))

    @classmethod
    def from_frame(cls, s):
        """Pair (S l_X, S l_P) carrying ``s`` as its frame."""
        if not isinstance(s, SymplecticMatrix):
            s = SymplecticMatrix.validate(s)
        n = s.n
        return cls(plane_from_basis(s.matrix[:, :n]), plane_from_basis(s.matrix[:, n:]), s)

    @property
    def n(self):
        return self.first.n

    @cached_property
    def frame(self):
        if self._frame is not None:
            return self._frame
        return frame_symplectic(self.first, self.second)

    def swapped(self):
        return TransversePair(self.second, self.first)
