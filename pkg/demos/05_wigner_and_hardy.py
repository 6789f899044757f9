# Gaussian Wigner functions and the sub-Gaussian (Hardy) limit.
import numpy as np

from sympolar import GaussianState, gaussian_state_wigner_form, hardy_verdict, joint_diagonalize
from sympolar.oracle import wigner_quadrature
from sympolar.quantum import gaussian_state_wigner
from sympolar.symplectic import symplectic_eigenvalues

psi = GaussianState([[1.5]], [[0.7]])
g = gaussian_state_wigner_form(psi).m
print("G =", g.round(4).tolist(), " symplectic eigenvalues", symplectic_eigenvalues(g))
for z in ([0.0, 0.0], [0.5, -0.3], [1.0, 1.0]):
    print(f"W({z}) analytic {gaussian_state_wigner(psi, z):.12f}  quadrature {wigner_quadrature(psi, z):.12f}")

print()
for a, b in ((np.eye(2), np.eye(2)), (np.eye(2) / 2, np.eye(2)), (2 * np.eye(2), np.eye(2))):
    v = hardy_verdict(a, b)
    print(f"A={np.diag(a)} B={np.diag(b)} -> {v.status.value}, eig(AB)={v.eigenvalues}")

lin, lam = joint_diagonalize(np.diag([4.0, 1.0]), np.eye(2))
print("\nL =", lin.round(4).tolist(), " lambda =", lam)
