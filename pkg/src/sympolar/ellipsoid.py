"""Centered ellipsoids in R^2n and inside Lagrangian planes.

An ambient ellipsoid is {z : M z . z <= 1}.  A plane ellipsoid lives in a
Lagrangian plane and stores its form in the coordinates of the plane's
orthonormal basis Q, i.e. it is {Q c : A c . c <= 1}.  Operations that
involve a transverse pair work in *frame coordinates*: the point S(x, 0)
of the first plane (resp. S(0, p) of the second) has coordinate x (resp. p)
where S is the pair's symplectic frame.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadShape, PlaneMismatch, SingularMatrix
from .lagrangian import LagrangianPlane, coordinate_plane
from .matops import as_spd, schur_complement, spd_inv, spd_logdet
from .symplectic import half_dim, symplectic_eigenvalues


@dataclass(frozen=True, eq=False)
class AmbientEllipsoid:
    m: np.ndarray

    def __post_init__(self):
        m = as_spd(self.m)
        half_dim(m)
        object.__setattr__(self, "m", m)

    @property
    def n(self):
        return self.m.shape[0] // 2

    def contains(self, z, tol=0.0):
        z = np.asarray(z, dtype=float)
        return float(z @ self.m @ z) <= 1.0 + tol

    def pullback(self, s):
        """The ellipsoid S^-1(Omega), whose form is S^T M S."""
        s = getattr(s, "matrix", s)
        return AmbientEllipsoid(s.T @ self.m @ s)

    def image(self, s):
        """The ellipsoid S(Omega), whose form is S^-T M S^-1."""
        s_inv = s.inverse() if hasattr(s, "inverse") else np.linalg.inv(s)
        return AmbientEllipsoid(s_inv.T @ self.m @ s_inv)


def ball(n, radius=1.0):
    """The ball B^2n(R)."""
    return AmbientEllipsoid(np.eye(2 * n) / radius**2)


@dataclass(frozen=True, eq=False)
class PlaneEllipsoid:
    plane: LagrangianPlane
    form: np.ndarray

    def __post_init__(self):
        form = as_spd(self.form)
        if form.shape[0] != self.plane.n:
            raise BadShape(f"form is {form.shape[0]}x{form.shape[0]} but plane has dimension {self.plane.n}")
        object.__setattr__(self, "form", form)

    @property
    def n(self):
        return self.plane.n

    def contains(self, c, tol=0.0):
        """Membership of a point given in plane coordinates."""
        c = np.atleast_1d(np.asarray(c, dtype=float))
        return float(c @ self.form @ c) <= 1.0 + tol

    def points(self, coords):
        """Ambient points Q c for rows c of ``coords``."""
        return np.atleast_2d(coords) @ self.plane.basis.T


def on_coordinate_plane(form, which="X"):
    form = as_spd(form)
    return PlaneEllipsoid(coordinate_plane(form.shape[0], which), form)


def _chart(plane, pair, which):
    """T = Q^T E: frame coordinates -> orthonormal plane coordinates."""
    n = pair.n
    s = pair.frame.matrix
    cols = s[:, :n] if which == "first" else s[:, n:]
    target = pair.first if which == "first" else pair.second
    if not plane.same_as(target):
        raise PlaneMismatch(f"ellipsoid does not live on the pair's {which} plane")
    return plane.basis.T @ cols


def to_frame_form(x, pair, which="first"):
    """Form of ``x`` in the frame coordinates of ``pair``."""
    t = _chart(x.plane, pair, which)
    return t.T @ x.form @ t


def from_frame_form(form, pair, which="first"):
    """Plane ellipsoid on the ``which`` plane of ``pair`` from a frame-coordinate form."""
    plane = pair.first if which == "first" else pair.second
    t_inv = np.linalg.inv(_chart(plane, pair, which))
    return PlaneEllipsoid(plane, t_inv.T @ form @ t_inv)


def polar_dual(x):
    """Polar dual of a centered ellipsoid {A x . x <= 1}, i.e. {A^-1 p . p <= 1}.

    ``x`` may be an n x n SPD form (returns the dual form) or a plane
    ellipsoid on l_X or l_P (returns the dual on the other coordinate plane).
    """
    if not isinstance(x, PlaneEllipsoid):
        return spd_inv(x)
    n = x.n
    for here, there in (("X", "P"), ("P", "X")):
        if x.plane.same_as(coordinate_plane(n, here)):
            # re-express in the exact coordinate basis before inverting
            t = x.plane.basis.T @ coordinate_plane(n, here).basis
            form = t.T @ x.form @ t
            return PlaneEllipsoid(coordinate_plane(n, there), spd_inv(form))
    raise PlaneMismatch("polar_dual needs an ellipsoid on l_X or l_P; use lagrangian_polar_dual")


def linear_image(lin, x):
    """L(X) for invertible L: form A becomes L^-T A L^-1.

    For a plane ellipsoid ``lin`` acts on the plane coordinates.
    """
    lin = np.atleast_2d(np.asarray(lin, dtype=float))
    if lin.shape[0] != lin.shape[1]:
        raise BadShape(f"L must be square, got {lin.shape}")
    if abs(np.linalg.det(lin)) < 1e-14 * max(1.0, np.max(np.abs(lin))) ** lin.shape[0]:
        raise SingularMatrix("L is singular")
    inv = np.linalg.inv(lin)
    if isinstance(x, PlaneEllipsoid):
        return PlaneEllipsoid(x.plane, inv.T @ x.form @ inv)
    return inv.T @ as_spd(x) @ inv


def orthogonal_projection(omega, onto="X"):
    """Shadow of ``omega`` on l_X or l_P: the Schur complement of the other block."""
    key = onto.upper()
    if key not in ("X", "P"):
        raise ValueError(f"onto must be 'X' or 'P', not {onto!r}")
    form = schur_complement(omega.m, eliminate="PP" if key == "X" else "XX")
    return PlaneEllipsoid(coordinate_plane(omega.n, key), form)


def lagrangian_projection(omega, pair, onto="first"):
    """Projection of ``omega`` onto one plane of ``pair`` along the other.

    With frame S, Pi_l = S Pi_X S^-1: pull back, take the coordinate
    shadow, push forward.
    """
    if onto not in ("first", "second"):
        raise ValueError(f"onto must be 'first' or 'second', not {onto!r}")
    pulled = omega.pullback(pair.frame)
    form = schur_complement(pulled.m, eliminate="PP" if onto == "first" else "XX")
    return from_frame_form(form, pair, onto)


def capacity(omega):
    """Symplectic capacity pi / lambda_max of the ellipsoid."""
    return math.pi / symplectic_eigenvalues(omega.m)[0]


def support_function(e, u):
    """h(u) = sqrt(u . M^-1 u).

    For a plane ellipsoid ``u`` is given in plane coordinates.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    m = e.m if isinstance(e, AmbientEllipsoid) else e.form
    if u.shape != (m.shape[0],):
        raise BadShape(f"direction must have length {m.shape[0]}, got {u.shape}")
    if not np.any(u):
        raise ValueError("support function needs a nonzero direction")
    return math.sqrt(float(u @ np.linalg.solve(m, u)))


def product_ball_form(a, pair):
    """Ambient form of S(diag(A, A^-1)) where A is a frame-coordinate form on the first plane."""
    a = as_spd(a)
    core = np.block([[a, np.zeros_like(a)], [np.zeros_like(a), spd_inv(a)]])
    return AmbientEllipsoid(core).image(pair.frame)


def john_of_dual_product(x, pair):
    """John ellipsoid of X_l x (X_l)^o_l', a symplectic unit ball.

    In frame coordinates the product is {A x.x <= 1} x {A^-1 p.p <= 1},
    whose John ellipsoid is A x.x + A^-1 p.p <= 1.
    """
    return product_ball_form(to_frame_form(x, pair, "first"), pair)


def unit_ball_volume(n):
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def log_volume(form):
    """log Vol{A x . x <= 1} = log kappa_n - 1/2 log det A."""
    form = as_spd(form)
    return math.log(unit_ball_volume(form.shape[0])) - 0.5 * spd_logdet(form)


def mahler_volume(x):
    """Vol(X) Vol(X^o); equal to kappa_n^2 for every centered ellipsoid."""
    form = x.form if isinstance(x, PlaneEllipsoid) else as_spd(x)
    return math.exp(log_volume(form) + log_volume(spd_inv(form)))

