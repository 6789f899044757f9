import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympolar import lagrangian as lg
from sympolar.errors import BadShape, ConstraintViolated, NotIsotropic, NotTransverse, RankDeficient
from sympolar.oracle import random_transverse_pair
from sympolar.symplectic import is_symplectic, random_symplectic, standard_j

seeds = st.integers(0, 2**32 - 1)
dims = st.integers(1, 3)


def test_plane_from_basis_examples():
    ell = lg.plane_from_basis(np.eye(4)[:, :2])
    assert ell.same_as(lg.coordinate_plane(2, "X"))
    lg.plane_from_basis(np.array([[1.0], [1.0]]))
    # e1 + f1 and e2 in R^4
    b = np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 0.0]])
    assert lg.plane_from_basis(b).n == 2


def test_plane_from_basis_errors():
    with pytest.raises(NotIsotropic):
        lg.plane_from_basis(np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(RankDeficient):
        lg.plane_from_basis(np.array([[1.0, 2.0], [0.0, 0.0], [1.0, 2.0], [0.0, 0.0]]))
    with pytest.raises(BadShape):
        lg.plane_from_basis(np.ones((3, 1)))


def test_plane_from_ab_examples():
    assert lg.plane_from_ab(np.eye(2), np.zeros((2, 2))).same_as(lg.coordinate_plane(2, "P"))
    assert lg.plane_from_ab(np.zeros((2, 2)), np.eye(2)).same_as(lg.coordinate_plane(2, "X"))
    ell = lg.plane_from_ab(np.eye(1) / np.sqrt(2), np.eye(1) / np.sqrt(2))
    assert ell.contains(np.array([1.0, -1.0]))
    with pytest.raises(ConstraintViolated):
        lg.plane_from_ab(np.eye(1), np.eye(1))


def test_transversality_examples():
    x, p = lg.coordinate_plane(2, "X"), lg.coordinate_plane(2, "P")
    assert lg.is_transverse(x, p)[0]
    assert not lg.is_transverse(x, x)[0]
    a = lg.plane_from_basis(np.array([[1.0], [1.0]]))
    b = lg.plane_from_basis(np.array([[1.0], [-1.0]]))
    assert lg.is_transverse(a, b)[0]
    with pytest.raises(NotTransverse):
        lg.TransversePair(x, x)


def test_frame_examples():
    assert np.allclose(lg.frame_symplectic(lg.coordinate_plane(2, "X"), lg.coordinate_plane(2, "P")).matrix, np.eye(4))
    s = lg.frame_symplectic(lg.coordinate_plane(2, "P"), lg.coordinate_plane(2, "X")).matrix
    assert is_symplectic(s)[0]
    assert np.allclose(s, -standard_j(2))
    a = lg.plane_from_basis(np.array([[1.0], [1.0]]))
    b = lg.plane_from_basis(np.array([[1.0], [-1.0]]))
    s = lg.frame_symplectic(a, b).matrix
    assert is_symplectic(s)[0]
    assert np.isclose(np.linalg.det(s), 1)
    # same planes as the hand frame [[1, -1/2], [1, 1/2]], up to rescaling within each plane
    hand = np.array([[1.0, -0.5], [1.0, 0.5]])
    ratio = np.linalg.solve(s, hand)
    assert np.allclose(ratio, np.diag(np.diag(ratio)))


def test_pair_helpers():
    pair = lg.TransversePair.coordinate(2)
    swapped = pair.swapped()
    assert swapped.first.same_as(pair.second)
    s = random_symplectic(3, 2)
    from_frame = lg.TransversePair.from_frame(s)
    assert from_frame.first.contains(s.matrix[:, 0])
    assert lg.plane_distance(pair.first, pair.first) == pytest.approx(0, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_frame_maps_coordinate_planes(seed, n):
    pair = random_transverse_pair(seed, n)
    s = pair.frame.matrix
    assert is_symplectic(s)[0]
    assert all(pair.first.contains(s[:, i]) for i in range(n))
    assert all(pair.second.contains(s[:, n + i]) for i in range(n))


@settings(max_examples=60, deadline=None)
@given(seeds, dims)
def test_symplectic_images_are_lagrangian(seed, n):
    s = random_symplectic(seed, n).matrix
    ell = lg.plane_from_basis(s[:, :n])
    j = standard_j(n)
    assert np.allclose(ell.basis.T @ j @ ell.basis, 0, atol=1e-10)
    assert np.allclose(ell.basis.T @ ell.basis, np.eye(n), atol=1e-12)
