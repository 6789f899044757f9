# Polar duality on a coordinate plane and across an arbitrary transverse pair.
import numpy as np

from sympolar import TransversePair, lagrangian_polar_dual, plane_from_basis, polar_dual
from sympolar.ellipsoid import PlaneEllipsoid, mahler_volume, on_coordinate_plane

a = np.diag([4.0, 1.0])
x = on_coordinate_plane(a)
dual = polar_dual(x)
print("X form", a.tolist(), "-> dual form", dual.form.tolist())
print("Mahler volume", mahler_volume(a), "vs pi^2", np.pi**2)

# two lines in the plane; omega(t e, d f) = t d for these orthonormal bases
ell = plane_from_basis(np.array([[1.0], [1.0]]))
ell_p = plane_from_basis(np.array([[1.0], [-1.0]]))
pair = TransversePair(ell, ell_p)
print("\nframe of (l, l'):\n", pair.frame.matrix)

seg = PlaneEllipsoid(ell, np.array([[4.0]]))  # |t| <= 1/2
print("dual of |t| <= 1/2 is |d| <= %.3f" % (1 / np.sqrt(lagrangian_polar_dual(seg, pair).form[0, 0])))

# spot check with the symplectic form directly
j = np.array([[0.0, 1.0], [-1.0, 0.0]])
t = np.linspace(-0.5, 0.5, 101)
z = np.outer(t, ell.basis[:, 0])
w = 2.0 * ell_p.basis[:, 0]
print("max omega(z, w) over X for w on the dual boundary:", np.max((z @ j.T) @ w))
