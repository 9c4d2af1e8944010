import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from fourspaces import (
    ConvergenceError,
    NotSymmetricError,
    ShapeError,
    SingularMatrixError,
    Tolerance,
    pivot_rank,
)
from fourspaces.spectral import eig_symmetric, similarity_check
from support import random_orthogonal


def test_eig_hand_fixture_two_by_two():
    # oracle: characteristic polynomial of [[2,1],[1,2]] solved directly
    tr, det = 4.0, 3.0
    disc = math.sqrt(tr * tr - 4.0 * det)
    lam_hi, lam_lo = (tr + disc) / 2.0, (tr - disc) / 2.0
    assert (lam_hi, lam_lo) == (3.0, 1.0)
    # oracle eigenvectors: (A - lam I) v = 0 solved by hand for each root
    v_hi = np.array([1.0, 1.0]) / math.sqrt(2.0)
    v_lo = np.array([1.0, -1.0]) / math.sqrt(2.0)
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    assert_allclose(a @ v_hi, lam_hi * v_hi, atol=1e-12)
    assert_allclose(a @ v_lo, lam_lo * v_lo, atol=1e-12)

    res = eig_symmetric(a)
    assert_allclose(res.values, [lam_hi, lam_lo], atol=1e-10)
    assert_allclose(res.q[:, 0], v_hi, atol=1e-10)
    assert_allclose(res.q[:, 1], v_lo, atol=1e-10)


def test_eig_identity_is_fixed_point():
    res = eig_symmetric(np.eye(2))
    assert_allclose(res.values, [1.0, 1.0], atol=1e-12)
    assert np.array_equal(res.q, np.eye(2))


def test_eig_diagonal_sorts_descending():
    res = eig_symmetric(np.diag([1.0, 3.0]))
    assert_allclose(res.values, [3.0, 1.0], atol=1e-12)
    # a signed permutation with positive sign convention
    assert_allclose(res.q, [[0.0, 1.0], [1.0, 0.0]], atol=1e-12)


def test_eig_one_by_one():
    res = eig_symmetric([[-7.0]])
    assert_allclose(res.values, [-7.0])
    assert_allclose(res.q, [[1.0]])


def test_eig_rejects_asymmetry_and_shape():
    with pytest.raises(NotSymmetricError):
        eig_symmetric([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ShapeError):
        eig_symmetric(np.ones((2, 3)))


def test_eig_sweep_cap_is_enforced(monkeypatch):
    import fourspaces.spectral as spectral

    monkeypatch.setattr(spectral, "MAX_SWEEPS", 0)
    rng = np.random.default_rng(0)
    s = rng.standard_normal((6, 6))
    s = s + s.T
    with pytest.raises(ConvergenceError):
        eig_symmetric(s)


@pytest.mark.parametrize("seed", range(8))
def test_eig_reconstruction_and_orthogonality(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 14))
    s = rng.standard_normal((n, n))
    s = s + s.T
    res = eig_symmetric(s)
    scale = max(1.0, float(np.sqrt(np.sum(s * s))))
    assert np.all(np.diff(res.values) <= 1e-12)
    assert_allclose(res.q @ np.diag(res.values) @ res.q.T, s, atol=1e-8 * scale)
    assert_allclose(res.q.T @ res.q, np.eye(n), atol=1e-8)
    for j in range(n):
        k = int(np.argmax(np.abs(res.q[:, j])))
        assert res.q[k, j] > 0.0


def test_eig_rank_matches_nonzero_eigenvalue_count():
    rng = np.random.default_rng(11)
    q = random_orthogonal(rng, 6)
    lam = np.array([4.0, 2.5, 1.0, 0.0, 0.0, 0.0])
    s = q @ np.diag(lam) @ q.T
    res = eig_symmetric(s)
    big = np.abs(res.values) > 1e-10 * np.max(np.abs(res.values))
    assert int(np.sum(big)) == 3
    assert pivot_rank(s) == 3


def test_eig_repeated_eigenvalues_stay_orthonormal():
    rng = np.random.default_rng(5)
    q = random_orthogonal(rng, 5)
    lam = np.array([5.0, 2.0, 2.0, 2.0, -1.0])
    s = q @ np.diag(lam) @ q.T
    res = eig_symmetric(s)
    assert_allclose(res.values, lam, atol=1e-9)
    assert_allclose(res.q.T @ res.q, np.eye(5), atol=1e-9)
    assert_allclose(res.q @ np.diag(res.values) @ res.q.T, s, atol=1e-9)


def test_similarity_orthogonal_conjugation_preserves_everything():
    a = np.diag([1.0, 2.0])
    rot = np.array([[0.0, -1.0], [1.0, 0.0]])
    # oracle: the conjugate computed by hand is diag(2, 1)
    assert_allclose(rot @ a @ rot.T, np.diag([2.0, 1.0]), atol=1e-15)
    rep = similarity_check(a, rot)
    assert rep.eigs_match is True
    assert rep.rank_match is True
    assert rep.trace_match is True


def test_similarity_general_nonsingular_skips_eigenvalues():
    rep = similarity_check(np.diag([1.0, 2.0]), [[1.0, 1.0], [0.0, 1.0]])
    assert rep.eigs_match is None
    assert rep.rank_match is True
    assert rep.trace_match is True


def test_similarity_rejects_singular_conjugator():
    with pytest.raises(SingularMatrixError):
        similarity_check(np.eye(2), [[1.0, 2.0], [2.0, 4.0]])


def test_similarity_random_orthogonal():
    rng = np.random.default_rng(21)
    for _ in range(5):
        n = int(rng.integers(2, 9))
        s = rng.standard_normal((n, n))
        s = s + s.T
        rep = similarity_check(s, random_orthogonal(rng, n))
        assert rep.eigs_match and rep.rank_match and rep.trace_match
