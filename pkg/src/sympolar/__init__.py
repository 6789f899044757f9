"""Lagrangian polar duality for centered ellipsoids in (R^2n, omega)."""

from .duality import (
    DualPairVerdict,
    DualStatus,
    ProjectionCheck,
    dual_pair_verdict,
    lagrangian_polar_dual,
    product_capacity,
    reconstruct_ball,
    thm1_check,
)
from .ellipsoid import (
    AmbientEllipsoid,
    PlaneEllipsoid,
    ball,
    capacity,
    john_of_dual_product,
    lagrangian_projection,
    linear_image,
    mahler_volume,
    orthogonal_projection,
    polar_dual,
    support_function,
)
from .errors import *  # noqa: F401,F403
from .lagrangian import LagrangianPlane, TransversePair, frame_symplectic, is_transverse, plane_from_ab, plane_from_basis
from .matops import psd_margin, schur_complement, sym_eig
from .quantum import (
    CovarianceMatrix,
    GaussianState,
    certify,
    gaussian_state_wigner_form,
    gaussian_wigner_eval,
    hardy_verdict,
    joint_diagonalize,
    uncertainty_ellipsoid,
    wigner_subgaussian_check,
)
from .symplectic import (
    PhaseVector,
    SymplecticMatrix,
    is_symplectic,
    random_symplectic,
    standard_j,
    symp_product,
    symplectic_eigenvalues,
    williamson,
)

__version__ = "0.1.0"
