import math

import numpy as np
import pytest

from sympolar import oracle as orc
from sympolar.ellipsoid import AmbientEllipsoid, ball
from sympolar.errors import BadShape
from sympolar.lagrangian import TransversePair
from sympolar.quantum import GaussianState
from sympolar.matops import psd_margin


def test_polar_membership_examples():
    cloud = orc.boundary_cloud(np.array([[0.25]]), 1000)
    ok, best = orc.mc_polar_membership(cloud, [0.49])
    assert ok and best == pytest.approx(0.98)
    ok, best = orc.mc_polar_membership(cloud, [0.51])
    assert not ok and best == pytest.approx(1.02)
    disc = orc.boundary_cloud(np.eye(2), 20000)
    ok, best = orc.mc_polar_membership(disc, [0.6, 0.8])
    assert ok and best == pytest.approx(1, abs=1e-3)
    with pytest.raises(BadShape):
        orc.mc_polar_membership(disc, [1.0])


def test_boundary_cloud_on_boundary():
    a = orc.random_spd(1, 3)
    pts = orc.boundary_cloud(a, 500, seed=9).points
    assert pts.shape == (1000, 3)
    assert np.allclose(np.einsum("ij,jk,ik->i", pts, a, pts), 1)


def test_shadow_examples():
    m = AmbientEllipsoid(np.array([[2.0, 1.0], [1.0, 1.0]]))
    pair = TransversePair.coordinate(1)
    u = np.array([[1.0]])
    assert orc.mc_projection_support(m, pair, "first", u)[0] == pytest.approx(1, abs=1e-6)
    assert orc.mc_projection_support(m, pair, "second", u)[0] == pytest.approx(math.sqrt(2), abs=1e-6)
    dirs = orc.direction_cloud(2, 5)
    est = orc.mc_projection_support(ball(2), TransversePair.coordinate(2), "first", dirs, count=20000)
    assert np.allclose(est, 1, atol=1e-6)
    with pytest.raises(ValueError):
        orc.mc_projection_support(m, pair, "third", u)


def test_quadrature_examples():
    psi = GaussianState(np.eye(1))
    assert orc.wigner_quadrature(psi, [0.0, 0.0]) == pytest.approx(1 / math.pi, abs=1e-6)
    assert orc.wigner_quadrature(psi, [2.0, 0.0]) == pytest.approx(math.exp(-4) / math.pi, abs=1e-6)
    psi = GaussianState([[0.8]], [[0.5]])
    z = np.array([0.4, -0.9])
    assert orc.wigner_quadrature(psi, z) == pytest.approx(orc.wigner_quadrature(psi, -z), abs=1e-9)
    with pytest.raises(BadShape):
        orc.wigner_quadrature(GaussianState(np.eye(2)), [0, 0, 0, 0])


def test_quadrature_convergence():
    # halving the step should at least halve the error until the floor
    psi = GaussianState([[1.0]], [[0.5]])
    from sympolar.quantum import gaussian_state_wigner

    z = np.array([0.3, 0.2])
    exact = gaussian_state_wigner(psi, z)
    errors = [abs(orc.wigner_quadrature(psi, z, (12.0, pts)) - exact) for pts in (21, 41, 81)]
    for coarse, fine in zip(errors, errors[1:]):
        assert fine <= max(coarse / 2, 1e-8)


def test_random_spd():
    a = orc.random_spd(3, 4, cap=1.0)
    assert np.allclose(a, np.eye(4))
    assert np.array_equal(orc.random_spd(5, 3), orc.random_spd(5, 3))
    for seed in range(20):
        m = orc.random_spd(seed, 3, cap=100.0)
        w = np.linalg.eigvalsh(m)
        assert psd_margin(m) > 0
        assert w[0] >= 1 / 100 - 1e-12 and w[-1] <= 100 + 1e-9
    with pytest.raises(ValueError):
        orc.random_spd(0, 2, cap=0.5)


def test_order_independence():
    # keyed streams: drawing pair 3 alone matches drawing it after others
    alone = orc.random_transverse_pair(9, 2, stream=3).frame.matrix
    for k in range(3):
        orc.random_transverse_pair(9, 2, stream=k)
    assert np.array_equal(orc.random_transverse_pair(9, 2, stream=3).frame.matrix, alone)
