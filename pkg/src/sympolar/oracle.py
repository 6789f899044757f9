"""Brute-force validators that never share a code path with the analytic routes.

Sampling is keyed by (seed, index) so clouds are reproducible regardless of
evaluation order.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from ._random import keyed_rng
from .errors import BadShape, GridWarning
from .lagrangian import TransversePair, plane_from_basis
from .symplectic import random_symplectic

POLAR_SLACK = 1e-3


@dataclass(frozen=True, eq=False)
class SampleCloud:
    points: np.ndarray
    seed: int
    generator: str

    @property
    def n(self):
        return self.points.shape[1]

    @property
    def count(self):
        return self.points.shape[0]


def _directions(seed, dim, count, stream):
    rng = keyed_rng(seed, dim, count, stream)
    u = rng.standard_normal((count, dim))
    return u / np.linalg.norm(u, axis=1, keepdims=True)


def boundary_cloud(form, count=20000, seed=0):
    """Points x(u) = u / sqrt(u.Au) on the boundary of {A x.x <= 1}, u uniform on the sphere.

    The cloud is symmetrized (x and -x) since the bodies are centered.
    """
    form = np.atleast_2d(np.asarray(form, dtype=float))
    u = _directions(seed, form.shape[0], count, 1)
    x = u / np.sqrt(np.einsum("ij,jk,ik->i", u, form, u))[:, None]
    return SampleCloud(np.vstack([x, -x]), seed, "ellipsoid-boundary")


def direction_cloud(dim, count, seed=0):
    return SampleCloud(_directions(seed, dim, count, 2), seed, "sphere")


def mc_polar_membership(boundary, p, slack=POLAR_SLACK):
    """Sampled test of p . x <= 1 for all x in X.

    Returns ``(accepted, max_inner)``.  A rejection is exact (a witness
    point violates the bound); an acceptance is approximate within ``slack``.
    """
    if boundary.count == 0:
        raise ValueError("empty sample cloud")
    p = np.atleast_1d(np.asarray(p, dtype=float))
    if p.shape != (boundary.n,):
        raise BadShape(f"candidate must have length {boundary.n}")
    best = float(np.max(boundary.points @ p))
    return best <= 1.0 + slack, best


def _oblique_coords(pair, onto):
    """Linear map z -> coordinates of the oblique projection onto the target plane."""
    n = pair.n
    basis_inv = np.linalg.inv(np.hstack([pair.first.basis, pair.second.basis]))
    return basis_inv[:n] if onto == "first" else basis_inv[n:]


def mc_projection_support(omega, pair, onto, directions, count=100000, seed=0, refine=200):
    """Support function of a Lagrangian shadow estimated from boundary samples of Omega.

    Boundary points z(v) = v / sqrt(v.Mv) of Omega are projected obliquely
    onto the target plane along the other plane (solve z = E a + F b), and
    h(u) ~ max u . a.  The best of ``count`` samples is then polished by
    ``refine`` rounds of random perturbation on the sphere of v, keeping
    improvements; every candidate is still a boundary point, so estimates
    never exceed the true value.  ``u`` is in the target plane's orthonormal
    coordinates.
    """
    if onto not in ("first", "second"):
        raise ValueError(f"onto must be 'first' or 'second', not {onto!r}")
    n = omega.n
    u = np.asarray(directions.points if isinstance(directions, SampleCloud) else directions, dtype=float)
    u = np.atleast_2d(u)
    if u.shape[1] != n:
        raise BadShape(f"directions must have length {n}")
    proj = _oblique_coords(pair, onto)

    v = boundary_cloud(omega.m, count, seed).points
    scores = (v @ proj.T) @ u.T
    idx = np.argmax(scores, axis=0)
    best_v = v[idx]
    best = scores[idx, np.arange(u.shape[0])]
    step = np.full(u.shape[0], 0.5)
    rng = keyed_rng(seed, 2 * n, count, 3)
    for _ in range(refine):
        trial = best_v[:, None, :] + step[:, None, None] * rng.standard_normal((u.shape[0], 32, 2 * n))
        z = trial / np.sqrt(np.einsum("kti,ij,ktj->kt", trial, omega.m, trial))[..., None]
        vals = np.einsum("kti,ji,kj->kt", z, proj, u)
        i = np.argmax(vals, axis=1)
        top = vals[np.arange(u.shape[0]), i]
        better = top > best
        best = np.where(better, top, best)
        best_v = np.where(better[:, None], trial[np.arange(u.shape[0]), i], best_v)
        step = np.where(better, step, 0.7 * step)
        if np.all(step < 1e-9):
            break
    return best


def trapezoid_weights(half_width, points):
    grid = np.linspace(-half_width, half_width, points)
    w = np.full(points, grid[1] - grid[0])
    w[0] = w[-1] = 0.5 * w[0]
    return grid, w


def wigner_quadrature(psi, z, grid=None):
    """W psi(x, p) = (2 pi)^-1 int e^{-i p y} psi(x + y/2) conj(psi(x - y/2)) dy, n = 1.

    Trapezoid rule on [-half_width, half_width] with ``points`` nodes.  The
    default grid is (12 / sqrt(A), 801).
    """
    if psi.n != 1:
        raise BadShape("wigner_quadrature supports n = 1 only")
    a = float(psi.a[0, 0])
    half_width, points = grid if grid is not None else (12.0 / np.sqrt(a), 801)
    if half_width < 6.0 / np.sqrt(a):
        warnings.warn(f"half-width {half_width} < 6/sqrt(A) = {6 / np.sqrt(a):.4g}", GridWarning, stacklevel=2)
    z = np.asarray(getattr(z, "as_array", lambda: z)(), dtype=float).ravel()
    x, p = z
    y, w = trapezoid_weights(half_width, points)
    integrand = np.exp(-1j * p * y) * psi(x + 0.5 * y) * np.conj(psi(x - 0.5 * y))
    return float(np.real(np.sum(w * integrand))) / (2 * np.pi)


def quadrature_2d(f, half_width=8.0, points=401):
    """Tensor trapezoid integral of f(x, p) over [-half_width, half_width]^2."""
    g, w = trapezoid_weights(half_width, points)
    xx, pp = np.meshgrid(g, g, indexing="ij")
    return float(np.sum(np.outer(w, w) * f(xx, pp)))


def p_marginal(f, x, half_width=12.0, points=801):
    """int f(x, p) dp by the trapezoid rule, for each x."""
    g, w = trapezoid_weights(half_width, points)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return np.array([np.sum(w * f(np.full_like(g, xi), g)) for xi in x])


def random_spd(seed, n, cap=10.0, stream=0):
    """SPD n x n matrix with eigenvalues log-uniform in [1/cap, cap] and a random eigenbasis."""
    if cap < 1:
        raise ValueError("condition cap must be >= 1")
    rng = keyed_rng(seed, n, 0x5350, stream)
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diag(r))
    w = np.exp(rng.uniform(-np.log(cap), np.log(cap), size=n))
    m = (q * w) @ q.T
    return 0.5 * (m + m.T)


def random_transverse_pair(seed, n, spread=0.5, stream=0):
    """Pair (S l_X, S l_P) for a random symplectic S; the frame is recomputed from the planes."""
    s = random_symplectic(seed, n, spread, stream=stream).matrix
    return TransversePair(plane_from_basis(s[:, :n]), plane_from_basis(s[:, n:]))
