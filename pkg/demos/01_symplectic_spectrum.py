# Symplectic spectrum and Williamson normal form of a few ellipsoid forms.
import numpy as np

from sympolar import random_symplectic, symplectic_eigenvalues, williamson
from sympolar.ellipsoid import AmbientEllipsoid, capacity

np.set_printoptions(precision=4, suppress=True)

m = np.diag([4.0, 1.0])
print("M =", m.tolist())
print("symplectic eigenvalues:", symplectic_eigenvalues(m))  # sqrt(det) for n = 1

w = williamson(m)
print("S =\n", w.s.matrix)
print("S^T D S =\n", w.reconstruct())

# a 4x4 example: the spectrum survives any symplectic change of frame
rng = np.random.default_rng(1)
g = rng.standard_normal((4, 4))
m = g @ g.T + np.eye(4)
s = random_symplectic(7, 2).matrix
print("\nlambda(M)        ", symplectic_eigenvalues(m))
print("lambda(S^T M S)  ", symplectic_eigenvalues(s.T @ m @ s))
print("ordinary eig(M)  ", np.linalg.eigvalsh(m))
print("ordinary eig(S^T M S)", np.linalg.eigvalsh(s.T @ m @ s))

omega = AmbientEllipsoid(m)
print("capacity pi / lambda_max =", capacity(omega))
print("capacity after S:", capacity(omega.image(random_symplectic(7, 2))))
