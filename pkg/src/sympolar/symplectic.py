"""Standard symplectic structure, Sp(n) membership and Williamson normal form.

Convention, fixed everywhere: z = (x, p), J = [[0, I], [-I, 0]] and
omega(z, w) = (J z) . w.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ._random import keyed_rng
from .errors import BadShape, NumericalFailure
from .matops import as_spd, max_norm, spd_roots

SYMPLECTIC_TOL = 1e-9
MAX_CONDITION = 1e12


def standard_j(n):
    """The 2n x 2n standard symplectic matrix in (x, p) ordering."""
    if n < 1:
        raise BadShape(f"n must be >= 1, got {n}")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


def half_dim(m):
    """Return n for a 2n x 2n matrix, raising :class:`BadShape` otherwise."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 or m.shape[0] == 0:
        raise BadShape(f"expected a square matrix of even dimension, got {m.shape}")
    return m.shape[0] // 2


@dataclass(frozen=True)
class PhaseVector:
    x: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        x = np.atleast_1d(np.asarray(self.x, dtype=float))
        p = np.atleast_1d(np.asarray(self.p, dtype=float))
        if x.shape != p.shape or x.ndim != 1:
            raise BadShape(f"x and p must be matching vectors, got {x.shape}, {p.shape}")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(p))):
            raise BadShape("phase vector has non-finite entries")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "p", p)

    @classmethod
    def from_array(cls, z):
        z = np.asarray(z, dtype=float).ravel()
        if z.size % 2:
            raise BadShape(f"phase vector needs even length, got {z.size}")
        n = z.size // 2
        return cls(z[:n], z[n:])

    @property
    def n(self):
        return self.x.size

    def as_array(self):
        return np.concatenate([self.x, self.p])


def _as_phase_array(z):
    if isinstance(z, PhaseVector):
        return z.as_array()
    z = np.asarray(z, dtype=float).ravel()
    if z.size % 2:
        raise BadShape(f"phase vector needs even length, got {z.size}")
    return z


def symp_product(z, w):
    """omega(z, w) = (J z) . w for phase vectors or flat (x, p) arrays."""
    z = _as_phase_array(z)
    w = _as_phase_array(w)
    if z.shape != w.shape:
        raise BadShape(f"dimension mismatch: {z.size} vs {w.size}")
    return float((standard_j(z.size // 2) @ z) @ w)


def symplectic_residual(s):
    s = np.asarray(s, dtype=float)
    j = standard_j(half_dim(s))
    return max_norm(s.T @ j @ s - j)


def is_symplectic(s, tol=SYMPLECTIC_TOL):
    """Return ``(verdict, residual)`` where residual = max|S^T J S - J|."""
    residual = symplectic_residual(s)
    return residual <= tol, residual


@dataclass(frozen=True)
class SymplecticMatrix:
    """A validated element of Sp(n)."""

    matrix: np.ndarray
    residual: float = 0.0

    @classmethod
    def validate(cls, s, tol=SYMPLECTIC_TOL):
        s = np.array(s, dtype=float)
        ok, residual = is_symplectic(s, tol)
        if not ok:
            raise NumericalFailure(f"matrix is not symplectic (residual {residual:.3e})")
        return cls(s, residual)

    @property
    def n(self):
        return self.matrix.shape[0] // 2

    def inverse(self):
        """S^-1 = -J S^T J, exact for symplectic S."""
        j = standard_j(self.n)
        return -j @ self.matrix.T @ j

    def __matmul__(self, other):
        if isinstance(other, SymplecticMatrix):
            return SymplecticMatrix.validate(self.matrix @ other.matrix)
        return self.matrix @ other


def symplectic_eigenvalues(m):
    """Symplectic spectrum of an SPD 2n x 2n matrix, in descending order.

    These are the moduli of the eigenvalues +-i*lambda of M^(1/2) J M^(1/2).

    >>> symplectic_eigenvalues(np.diag([4.0, 1.0]))
    array([2.])
    """
    m = as_spd(m)
    n = half_dim(m)
    root, _ = spd_roots(m)
    k = root @ standard_j(n) @ root
    # i*K is Hermitian with eigenvalues +-lambda_j
    w = np.linalg.eigvalsh(1j * k)
    return np.sort(w[n:])[::-1].copy()


@dataclass(frozen=True)
class WilliamsonForm:
    """M = S^T diag(L, L) S with S symplectic and L the symplectic spectrum."""

    s: SymplecticMatrix
    lambdas: np.ndarray

    @property
    def diagonal(self):
        return np.diag(np.concatenate([self.lambdas, self.lambdas]))

    def reconstruct(self):
        return self.s.matrix.T @ self.diagonal @ self.s.matrix


def _skew_canonical_frame(k):
    """Orthogonal O with O^T K O = [[0, G], [-G, 0]], G = diag(g) > 0 descending."""
    n = k.shape[0] // 2
    t, o = scipy.linalg.schur(k, output="real")
    first, second, gammas = [], [], []
    i = 0
    dim = k.shape[0]
    while i < dim:
        if i + 1 < dim and abs(t[i + 1, i]) > 0:
            b = t[i, i + 1]
            if b > 0:
                first.append(i)
                second.append(i + 1)
            else:
                first.append(i + 1)
                second.append(i)
            gammas.append(0.5 * (abs(t[i, i + 1]) + abs(t[i + 1, i])))
            i += 2
        else:
            # a real (zero) eigenvalue would mean K is singular
            raise NumericalFailure("skew matrix has a zero eigenvalue; input not definite")
    if len(gammas) != n:
        raise NumericalFailure("skew canonical form has the wrong number of blocks")
    order = np.argsort(gammas)  # ascending gamma = descending lambda
    first = [first[q] for q in order]
    second = [second[q] for q in order]
    gammas = np.array(gammas)[order]
    frame = np.concatenate([o[:, first], o[:, second]], axis=1)
    return frame, gammas


def williamson(m, spd_tol=None):
    """Williamson normal form of an SPD 2n x 2n matrix.

    Builds K = M^(-1/2) J M^(-1/2), brings it to real skew canonical form
    O^T K O = diag(G, G) J, and sets S = D^(-1/2) O^T M^(1/2) with
    D = diag(G, G)^(-1).  Then S^T D S = M and S is symplectic.

    ``spd_tol`` loosens the positive-definiteness check; condition numbers
    above MAX_CONDITION are refused regardless.
    """
    m = as_spd(m) if spd_tol is None else as_spd(m, spd_tol)
    n = half_dim(m)
    w = np.linalg.eigvalsh(m)
    if w[-1] / w[0] > MAX_CONDITION:
        raise NumericalFailure(f"condition number {w[-1] / w[0]:.3e} exceeds {MAX_CONDITION:.0e}")
    root, inv_root = spd_roots(m)
    k = inv_root @ standard_j(n) @ inv_root
    k = 0.5 * (k - k.T)
    frame, gammas = _skew_canonical_frame(k)
    lambdas = 1.0 / gammas
    d_half_inv = np.sqrt(np.concatenate([gammas, gammas]))
    s = (d_half_inv[:, None] * frame.T) @ root
    return WilliamsonForm(SymplecticMatrix.validate(s), lambdas)


def _symmetric_uniform(rng, n, spread):
    c = rng.uniform(-spread, spread, size=(n, n))
    return 0.5 * (c + c.T)


def random_symplectic(seed, n, spread=0.5, rounds=2, stream=0):
    """Deterministic pseudo-random element of Sp(n).

    Alternates the generators diag(L, L^-T), the shear [[I, 0], [C, I]]
    (C symmetric) and J; L = I + U and C are filled from uniform(-spread,
    spread) draws keyed by ``(seed, stream)``.
    """
    if spread <= 0:
        raise ValueError("spread must be positive")
    rng = keyed_rng(seed, n, 0x5359, stream)
    eye = np.eye(n)
    zero = np.zeros((n, n))
    j = standard_j(n)
    s = np.eye(2 * n)
    for _ in range(rounds):
        lin = eye + rng.uniform(-spread, spread, size=(n, n))
        while abs(np.linalg.det(lin)) < 0.1:
            lin = eye + rng.uniform(-spread, spread, size=(n, n))
        dilation = np.block([[lin, zero], [zero, np.linalg.inv(lin).T]])
        shear = np.block([[eye, zero], [_symmetric_uniform(rng, n, spread), eye]])
        s = s @ dilation @ shear @ j
    return SymplecticMatrix.validate(s)
