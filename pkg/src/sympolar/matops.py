"""Dense symmetric matrix kernels.

Every symmetric operand is validated and symmetrized on entry; tolerances
are relative to the largest absolute eigenvalue (or max-entry) of the
operand so that verdicts are invariant under rescaling.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadShape, NotPositiveDefinite, NotSymmetric, NumericalFailure

SYM_TOL = 1e-12
SPD_TOL = 1e-10
IDENTITY_TOL = 1e-9


def as_symmetric(m, tol=SYM_TOL):
    """Validate ``m`` as a real symmetric matrix and return ``(m + m.T) / 2``.

    Raises
    ------
    BadShape
        If ``m`` is not a square 2-D array.
    NotSymmetric
        If ``max|m_ij - m_ji| > tol * max(1, max|m_ij|)``.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise BadShape(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise BadShape("matrix has non-finite entries")
    asym = np.max(np.abs(m - m.T))
    scale = max(1.0, np.max(np.abs(m)))
    if asym > tol * scale:
        raise NotSymmetric(f"asymmetry {asym:.3e} exceeds {tol:.1e} relative")
    return 0.5 * (m + m.T)


def sym_eig(m):
    """Eigendecomposition of a symmetric matrix.

    Returns eigenvalues in ascending order and an orthonormal matrix whose
    columns are the matching eigenvectors.
    """
    m = as_symmetric(m)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigh did not converge: {exc}") from exc
    return w, v


def psd_margin(m):
    """Smallest eigenvalue of a symmetric matrix.

    Callers classify ``m`` as PSD iff the margin is ``>= -tol``.
    """
    m = as_symmetric(m)
    try:
        return float(np.linalg.eigvalsh(m)[0])
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigvalsh did not converge: {exc}") from exc


def as_spd(m, tol=SPD_TOL):
    """Validate ``m`` as symmetric positive definite and return it symmetrized.

    The smallest eigenvalue must exceed ``tol`` times the largest.
    """
    m = as_symmetric(m)
    w = np.linalg.eigvalsh(m)
    if w[0] <= tol * max(abs(w[-1]), np.finfo(float).tiny):
        raise NotPositiveDefinite(
            f"not positive definite (min eig {w[0]:.6g})", min_eig=float(w[0])
        )
    return m


def is_spd(m, tol=SPD_TOL):
    try:
        as_spd(m, tol)
    except (NotPositiveDefinite, NotSymmetric, BadShape):
        return False
    return True


def spd_roots(m):
    """Principal square root of an SPD matrix and its inverse.

    >>> s, si = spd_roots(np.diag([4.0, 9.0]))
    >>> np.diag(s)
    array([2., 3.])
    """
    m = as_spd(m)
    w, v = np.linalg.eigh(m)
    r = np.sqrt(w)
    sqrt = (v * r) @ v.T
    inv_sqrt = (v / r) @ v.T
    return 0.5 * (sqrt + sqrt.T), 0.5 * (inv_sqrt + inv_sqrt.T)


def spd_inv(m):
    """Inverse of an SPD matrix via its eigendecomposition, symmetrized."""
    m = as_spd(m)
    w, v = np.linalg.eigh(m)
    inv = (v / w) @ v.T
    return 0.5 * (inv + inv.T)


def spd_logdet(m):
    m = as_spd(m)
    return float(np.sum(np.log(np.linalg.eigvalsh(m))))


@dataclass(frozen=True)
class BlockSplit:
    """The four n x n blocks of a symmetric 2n x 2n matrix in (x, p) order."""

    xx: np.ndarray
    xp: np.ndarray
    px: np.ndarray
    pp: np.ndarray

    @classmethod
    def from_matrix(cls, m):
        m = as_symmetric(m)
        if m.shape[0] % 2:
            raise BadShape(f"block split needs even dimension, got {m.shape[0]}")
        n = m.shape[0] // 2
        xp = m[:n, n:].copy()
        return cls(m[:n, :n].copy(), xp, xp.T.copy(), m[n:, n:].copy())

    @property
    def n(self):
        return self.xx.shape[0]

    def assemble(self):
        return np.block([[self.xx, self.xp], [self.px, self.pp]])


def schur_complement(m, eliminate="PP"):
    """Schur complement of the ``eliminate`` block in a 2n x 2n symmetric matrix.

    ``eliminate="PP"`` gives ``M/M_PP = M_XX - M_XP M_PP^-1 M_PX`` and
    ``eliminate="XX"`` gives ``M/M_XX = M_PP - M_PX M_XX^-1 M_XP``.
    ``m`` may be an array or a :class:`BlockSplit`.
    """
    blocks = m if isinstance(m, BlockSplit) else BlockSplit.from_matrix(m)
    key = eliminate.upper()
    if key == "PP":
        keep, off, elim = blocks.xx, blocks.xp, blocks.pp
    elif key == "XX":
        keep, off, elim = blocks.pp, blocks.px, blocks.xx
    else:
        raise ValueError(f"eliminate must be 'PP' or 'XX', not {eliminate!r}")
    try:
        elim = as_spd(elim)
    except NotPositiveDefinite as exc:
        raise NotPositiveDefinite(
            f"eliminated block {key} is not positive definite", exc.min_eig
        ) from exc
    s = keep - off @ np.linalg.solve(elim, off.T)
    return 0.5 * (s + s.T)


def max_norm(m):
    return float(np.max(np.abs(m)))
