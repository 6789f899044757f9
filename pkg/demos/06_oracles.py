# Sampling oracles against the closed forms.
import numpy as np

from sympolar import TransversePair
from sympolar.ellipsoid import AmbientEllipsoid, lagrangian_projection, support_function
from sympolar.oracle import boundary_cloud, direction_cloud, mc_polar_membership, mc_projection_support

cloud = boundary_cloud(np.array([[0.25]]), 1000)
for p in (0.49, 0.51):
    print("p = %.2f in [-2,2]^o?" % p, mc_polar_membership(cloud, [p]))

omega = AmbientEllipsoid(np.array([[3.0, 1.0, 0.2, 0.0], [1.0, 2.0, 0.0, 0.3], [0.2, 0.0, 1.0, 0.1], [0.0, 0.3, 0.1, 1.5]]))
pair = TransversePair.coordinate(2)
dirs = direction_cloud(2, 4, seed=1)
est = mc_projection_support(omega, pair, "second", dirs, count=20000)
shadow = lagrangian_projection(omega, pair, "second")
for u, e in zip(dirs.points, est):
    print(f"u={u.round(3)}  sampled {e:.8f}  exact {support_function(shadow, u):.8f}")
