# Shadows of symplectic balls on transverse Lagrangian planes form dual pairs.
import numpy as np

from sympolar import TransversePair, reconstruct_ball, thm1_check
from sympolar.ellipsoid import AmbientEllipsoid, PlaneEllipsoid, ball, john_of_dual_product, lagrangian_projection
from sympolar.oracle import random_spd, random_transverse_pair
from sympolar.symplectic import random_symplectic, symplectic_eigenvalues

m = np.array([[2.0, 1.0], [1.0, 1.0]])
check = thm1_check(AmbientEllipsoid(m), TransversePair.coordinate(1))
print("M = [[2,1],[1,1]]: shadows", check.first.form.ravel(), check.second.form.ravel())
print("  inclusion margin", check.inclusion_margin, "verdict", check.verdict.status.value)

margins = []
for k in range(200):
    n = 1 + k % 3
    omega = ball(n).image(random_symplectic(3, n, stream=k))
    margins.append(thm1_check(omega, random_transverse_pair(4, n, stream=k)).inclusion_margin)
print("200 random balls and pairs: smallest margin %.3e" % min(margins))

# the other direction: rebuild the ball from one shadow
pair = random_transverse_pair(5, 2)
x = PlaneEllipsoid(pair.first, random_spd(5, 2))
omega = reconstruct_ball(x, pair)
print("\nreconstructed ball, symplectic eigenvalues:", symplectic_eigenvalues(omega.m))
print("shadow error:", np.abs(lagrangian_projection(omega, pair, "first").form - x.form).max())

john = john_of_dual_product(x, pair)
print("John ellipsoid of X x X^o equals it:", np.allclose(john.m, omega.m))
