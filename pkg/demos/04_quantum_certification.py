# Which covariance matrices are quantum? Two tests and the capacity picture.
import numpy as np

from sympolar import certify, uncertainty_ellipsoid
from sympolar.ellipsoid import capacity

cases = {
    "vacuum": 0.5 * np.eye(2),
    "squeezed": np.diag([2.0, 0.125]),
    "correlated": np.array([[1.0, 0.4], [0.4, 0.5]]),
    "too sharp": np.diag([0.2, 0.2]),
}
for name, sigma in cases.items():
    r = certify(sigma)
    c = capacity(uncertainty_ellipsoid(sigma))
    print(
        f"{name:11s} admissible={r.admissible!s:5s} lambda_min={r.min_symplectic_eig:.4f} "
        f"RS margin={r.rs_margins[0]:+.4f} capacity/pi={c / np.pi:.4f}"
    )

# Robertson-Schroedinger can pass while the full condition fails (n = 2)
sigma = np.array([
    [1.0, 0.0, 0.0, 0.9],
    [0.0, 1.0, 0.9, 0.0],
    [0.0, 0.9, 1.0, 0.0],
    [0.9, 0.0, 0.0, 1.0],
])
r = certify(sigma)
print("\nentangled-looking sigma: RS margins", r.rs_margins, "admissible", r.admissible)
