import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympolar import matops
from sympolar.errors import BadShape, NotPositiveDefinite, NotSymmetric
from sympolar.oracle import random_spd

seeds = st.integers(0, 2**32 - 1)


def test_sym_eig_examples():
    w, v = matops.sym_eig(np.diag([3.0, 1.0]))
    assert np.allclose(w, [1, 3])
    assert np.allclose(np.abs(v), [[0, 1], [1, 0]])
    w, _ = matops.sym_eig(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(w, [-1, 1])
    w, _ = matops.sym_eig(np.eye(4))
    assert np.allclose(w, 1)


def test_spd_roots_examples():
    root, inv_root = matops.spd_roots(np.diag([4.0, 9.0]))
    assert np.allclose(root, np.diag([2, 3]))
    assert np.allclose(inv_root, np.diag([0.5, 1 / 3]))
    root, inv_root = matops.spd_roots(np.eye(3))
    assert np.allclose(root, np.eye(3)) and np.allclose(inv_root, np.eye(3))
    root, _ = matops.spd_roots(np.array([[2.0, 1.0], [1.0, 2.0]]))
    u = np.array([1.0, -1.0]) / np.sqrt(2)
    v = np.array([1.0, 1.0]) / np.sqrt(2)
    assert np.allclose(root @ u, 1.0 * u)
    assert np.allclose(root @ v, np.sqrt(3) * v)


def test_psd_margin_examples():
    assert matops.psd_margin(np.eye(2)) == pytest.approx(1)
    assert matops.psd_margin(np.diag([1.0, -2.0])) == pytest.approx(-2)
    assert matops.psd_margin(np.array([[1.0, 2.0], [2.0, 1.0]])) == pytest.approx(-1)


def test_schur_examples():
    m = np.array([[2.0, 1.0], [1.0, 1.0]])
    assert matops.schur_complement(m, "PP")[0, 0] == pytest.approx(1)
    assert matops.schur_complement(m, "XX")[0, 0] == pytest.approx(0.5)
    a = np.array([[3.0, 1.0], [1.0, 2.0]])
    blk = np.block([[a, np.zeros((2, 2))], [np.zeros((2, 2)), np.diag([5.0, 6.0])]])
    assert np.allclose(matops.schur_complement(blk, "PP"), a)


def test_validation_errors():
    with pytest.raises(NotSymmetric):
        matops.as_symmetric(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(BadShape):
        matops.as_symmetric(np.ones((2, 3)))
    with pytest.raises(NotPositiveDefinite) as info:
        matops.as_spd(np.diag([1.0, -0.2]))
    assert info.value.min_eig == pytest.approx(-0.2)
    with pytest.raises(ValueError):
        matops.schur_complement(np.eye(2), "QQ")


def test_block_split_round_trip():
    m = random_spd(3, 4)
    blocks = matops.BlockSplit.from_matrix(m)
    assert blocks.n == 2
    assert np.array_equal(blocks.assemble(), m)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 5))
def test_sym_eig_reconstructs(seed, n):
    m = random_spd(seed, n, cap=100.0) - 0.5 * np.eye(n)
    w, v = matops.sym_eig(m)
    assert np.all(np.diff(w) >= 0)
    assert np.allclose(v.T @ v, np.eye(n), atol=1e-12)
    assert np.allclose(v @ np.diag(w) @ v.T, m, atol=1e-10 * max(1, np.abs(m).max()))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 5))
def test_roots_and_inverse(seed, n):
    m = random_spd(seed, n, cap=50.0)
    root, inv_root = matops.spd_roots(m)
    assert np.allclose(root @ root, m, atol=1e-10)
    assert np.allclose(root @ inv_root, np.eye(n), atol=1e-10)
    assert np.allclose(matops.spd_inv(m) @ m, np.eye(n), atol=1e-10)
    assert matops.spd_logdet(m) == pytest.approx(np.log(np.linalg.det(m)), abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 3))
def test_schur_is_inverse_block(seed, n):
    # M/M_PP is the inverse of the XX block of M^-1
    m = random_spd(seed, 2 * n, cap=20.0)
    inv = np.linalg.inv(m)
    assert np.allclose(matops.schur_complement(m, "PP"), np.linalg.inv(inv[:n, :n]), atol=1e-9)
    assert np.allclose(matops.schur_complement(m, "XX"), np.linalg.inv(inv[n:, n:]), atol=1e-9)
