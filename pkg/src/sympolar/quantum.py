"""Uncertainty certification for covariance matrices and Gaussian states.

Units with hbar = 1.  Phase-space vectors are ordered z = (x, p).
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .ellipsoid import AmbientEllipsoid
from .errors import BadShape, InternalInconsistency
from .matops import BlockSplit, as_spd, as_symmetric, spd_inv, spd_logdet, spd_roots
from .symplectic import PhaseVector, half_dim, standard_j, symplectic_eigenvalues

ADMISSIBLE_TOL = 1e-9
ROUTE_BAND = 1e-7
SPECTRUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    sigma: np.ndarray

    def __post_init__(self):
        sigma = as_spd(self.sigma)
        half_dim(sigma)
        object.__setattr__(self, "sigma", sigma)

    @property
    def n(self):
        return self.sigma.shape[0] // 2

    @property
    def blocks(self):
        return BlockSplit.from_matrix(self.sigma)


@dataclass(frozen=True, eq=False)
class GaussianState:
    """psi(x) = (pi)^(-n/4) (det A)^(1/4) exp(-(A + iB) x.x / 2)."""

    a: np.ndarray
    b: np.ndarray = None

    def __post_init__(self):
        a = as_spd(self.a)
        b = np.zeros_like(a) if self.b is None else as_symmetric(self.b)
        if a.shape != b.shape:
            raise BadShape(f"A and B must have the same shape, got {a.shape}, {b.shape}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self):
        return self.a.shape[0]

    def __call__(self, x):
        """Evaluate psi at the rows of ``x`` (shape (..., n))."""
        x = np.asarray(x, dtype=float)
        if self.n == 1 and (x.ndim == 0 or x.shape[-1] != 1):
            x = x[..., None]
        quad = np.einsum("...i,ij,...j->...", x, self.a + 1j * self.b, x)
        norm = math.pi ** (-self.n / 4) * math.exp(0.25 * spd_logdet(self.a))
        return norm * np.exp(-0.5 * quad)


@dataclass(frozen=True)
class CertificationReport:
    rs_margins: np.ndarray
    min_hermitian_eig: float
    min_symplectic_eig: float
    admissible: bool


def hermitian_embedding(sigma):
    """Real symmetric 4n x 4n embedding of Sigma + (i/2) J.

    For H = X + iY the embedding is [[X, -Y], [Y, X]]; its eigenvalues are
    those of H, each repeated twice.
    """
    n = half_dim(sigma)
    y = 0.5 * standard_j(n)
    return np.block([[sigma, -y], [y, sigma]])


def rs_margins(sigma):
    """sigma_xjxj sigma_pjpj - sigma_xjpj^2 - 1/4 for each degree of freedom."""
    blocks = BlockSplit.from_matrix(sigma)
    return np.diag(blocks.xx) * np.diag(blocks.pp) - np.diag(blocks.xp) ** 2 - 0.25


def certify(cov, tol=ADMISSIBLE_TOL):
    """Decide whether ``cov`` is a quantum covariance matrix.

    Two independent routes: the smallest eigenvalue of Sigma + (i/2) J, and
    the smallest symplectic eigenvalue of Sigma compared with 1/2.  They must
    agree outside a narrow band around the boundary.
    """
    if not isinstance(cov, CovarianceMatrix):
        cov = CovarianceMatrix(cov)
    sigma = cov.sigma
    h = float(np.linalg.eigvalsh(hermitian_embedding(sigma))[0])
    lam = float(symplectic_eigenvalues(sigma)[-1])
    by_hermitian = h >= -tol
    by_spectrum = lam >= 0.5 - tol
    if by_hermitian != by_spectrum and abs(h) > ROUTE_BAND and abs(lam - 0.5) > ROUTE_BAND:
        raise InternalInconsistency(
            f"hermitian route (min eig {h:.3e}) and symplectic route (lambda {lam:.12g}) disagree"
        )
    return CertificationReport(rs_margins(sigma), h, lam, by_hermitian)


def uncertainty_ellipsoid(cov):
    """Omega = {z : Sigma^-1 z.z / 2 <= 1}; capacity >= pi iff Sigma is admissible."""
    if not isinstance(cov, CovarianceMatrix):
        cov = CovarianceMatrix(cov)
    return AmbientEllipsoid(0.5 * spd_inv(cov.sigma))


def _phase_array(z):
    return z.as_array() if isinstance(z, PhaseVector) else np.asarray(z, dtype=float)


def gaussian_wigner_eval(cov, zbar, z):
    """Gaussian density (2 pi)^-n (det Sigma)^-1/2 exp(-Sigma^-1 (z - zbar)^2 / 2).

    ``z`` may carry leading batch dimensions.
    """
    if not isinstance(cov, CovarianceMatrix):
        cov = CovarianceMatrix(cov)
    z, zbar = _phase_array(z), _phase_array(zbar)
    if z.shape[-1] != 2 * cov.n or zbar.shape[-1] != 2 * cov.n:
        raise BadShape(f"phase vectors must have length {2 * cov.n}")
    d = z - zbar
    quad = np.einsum("...i,ij,...j->...", d, spd_inv(cov.sigma), d)
    log_norm = -cov.n * math.log(2 * math.pi) - 0.5 * spd_logdet(cov.sigma)
    return np.exp(log_norm - 0.5 * quad)


def wigner_form_matrix(a, b):
    """G = [[A + B A^-1 B, B A^-1], [A^-1 B, A^-1]]."""
    a_inv = spd_inv(a)
    g = np.block([[a + b @ a_inv @ b, b @ a_inv], [a_inv @ b, a_inv]])
    return 0.5 * (g + g.T)


def gaussian_state_wigner_form(psi):
    """Ellipsoid {G z.z <= 1} with W psi(z) = pi^-n exp(-G z.z)."""
    return AmbientEllipsoid(wigner_form_matrix(psi.a, psi.b))


def gaussian_state_wigner(psi, z):
    """Analytic Wigner transform of a Gaussian state at ``z`` (batched)."""
    g = wigner_form_matrix(psi.a, psi.b)
    z = _phase_array(z)
    return math.pi ** (-psi.n) * np.exp(-np.einsum("...i,ij,...j->...", z, g, z))


class HardyStatus(str, enum.Enum):
    INADMISSIBLE = "Inadmissible"
    ADMISSIBLE = "Admissible"
    GAUSSIAN_FORCED = "GaussianForced"


@dataclass(frozen=True)
class HardyVerdict:
    status: HardyStatus
    eigenvalues: np.ndarray


def _spectral_status(values, tol=SPECTRUM_TOL):
    if np.all(np.abs(values - 1.0) <= tol):
        return HardyStatus.GAUSSIAN_FORCED
    if np.all(values <= 1.0 + tol):
        return HardyStatus.ADMISSIBLE
    return HardyStatus.INADMISSIBLE


def hardy_verdict(a, b, tol=SPECTRUM_TOL):
    """Classify the sub-Gaussian bounds |psi| <= C e^{-Ax.x/2}, |F psi| <= C e^{-Bp.p/2}.

    A nonzero psi exists iff every eigenvalue of AB is <= 1, and psi is
    forced to be the Gaussian e^{-Ax.x/2} when all of them equal 1.
    """
    root, _ = spd_roots(a)
    b = as_spd(b)
    values = np.linalg.eigvalsh(root @ b @ root)[::-1].copy()
    return HardyVerdict(_spectral_status(values, tol), values)


def joint_diagonalize(a, b):
    """L with L^T A L = L^-1 B L^-T = diag(sqrt(lambda)), lambda = eig(AB) descending.

    Construction: A^1/2 B A^1/2 = U D U^T and L = A^-1/2 U D^1/4.

    >>> lin, lam = joint_diagonalize(np.diag([4.0, 1.0]), np.eye(2))
    >>> lam
    array([4., 1.])
    """
    root, inv_root = spd_roots(a)
    b = as_spd(b)
    d, u = np.linalg.eigh(root @ b @ root)
    # descending, ties kept in eigh order so A = B = I gives L = I
    order = np.argsort(-d, kind="stable")
    d, u = d[order], u[:, order]
    lin = inv_root @ u * d**0.25
    return lin, d.copy()


def wigner_subgaussian_check(m, tol=SPECTRUM_TOL):
    """Can a nonzero psi satisfy W psi(z) <= C exp(-M z.z)?

    Only if every symplectic eigenvalue of M is <= 1 (capacity of {Mz.z <= 1}
    at least pi); all equal to 1 forces W psi to be Gaussian.
    """
    values = symplectic_eigenvalues(m)
    return HardyVerdict(_spectral_status(values, tol), values)
