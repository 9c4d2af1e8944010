"""Least squares read through the four subspaces.

Every solver here returns the same record: an estimate, the projection of
the observation onto the column space, and the residual left over in the
left null space.  The normal-equation route requires full column rank; the
SVD route works at any rank and picks the minimum-norm minimizer, which is
the one lying entirely in the row space.  Projectors onto the column and
row spaces round out the picture, with a diagnostics helper that checks
the idempotent-and-symmetric laws directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InconsistentSystemError, RankDeficientError, ShapeError
from .factorizations import svd_reduced
from .inverses import left_inverse, pinv_svd, right_inverse
from .matrix import (
    DEFAULT_TOL,
    _as_tolerance,
    as_matrix,
    as_vector,
    frobenius_norm,
    pivot_rank,
)
from .spectral import eig_symmetric

__all__ = [
    "LsSolution",
    "ProjectorReport",
    "ls_normal",
    "ls_svd_minnorm",
    "observation_split",
    "projector_column",
    "projector_row",
    "projector_diagnostics",
    "consistent_unique_solve",
    "right_solve",
]


@dataclass(frozen=True)
class LsSolution:
    """A least-squares answer split into estimate, projection, and residual.

    ``y_hat + residual`` reconstructs the observation, ``y_hat`` lies in
    the column space, and ``residual`` in the left null space.  ``method``
    names the route that produced the estimate: ``normal``,
    ``svd-minnorm``, ``unique-consistent``, or ``right-inverse``.
    """

    beta_hat: np.ndarray
    y_hat: np.ndarray
    residual: np.ndarray
    residual_norm: float
    rank_used: int
    method: str


@dataclass(frozen=True)
class ProjectorReport:
    """Diagnostics for a square matrix claiming to be a projector.

    ``spectrum_binary`` is ``None`` when the matrix is not symmetric,
    since the eigenvalue check runs on the symmetric engine only.
    """

    idempotent: bool
    symmetric: bool
    trace: float
    rank: int
    spectrum_binary: bool | None


def _finish(x, y, beta, rank_used, method):
    y_hat = x @ beta
    residual = y - y_hat
    return LsSolution(
        beta_hat=beta,
        y_hat=y_hat,
        residual=residual,
        residual_norm=float(np.linalg.norm(residual)),
        rank_used=rank_used,
        method=method,
    )


def ls_normal(x, y, tol=DEFAULT_TOL):
    """Least squares by the normal equation; needs full column rank.

    Solves ``(X^T X) beta = X^T y`` and splits the observation into the
    projection ``X beta`` and the residual orthogonal to the column space.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    n, p = x.shape
    y = as_vector(y, length=n, name="y")
    if pivot_rank(x, tol) < p:
        raise RankDeficientError(
            "normal-equation least squares needs full column rank; "
            "use ls_svd_minnorm for the rank-deficient case"
        )
    beta = left_inverse(x, tol) @ y
    return _finish(x, y, beta, p, "normal")


def ls_svd_minnorm(x, y, tol=DEFAULT_TOL):
    """Minimum-norm least squares at any rank.

    The estimate is ``sum_i (u_i^T y / sigma_i) v_i`` over the retained
    singular triplets, i.e. the pseudo-inverse applied to ``y``.  Among
    all minimizers of the residual it is the one of smallest Euclidean
    norm, and it lies in the row space.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    n, p = x.shape
    y = as_vector(y, length=n, name="y")
    res = svd_reduced(x, tol)
    if res.rank == 0:
        beta = np.zeros(p)
    else:
        beta = res.v @ ((res.u.T @ y) / res.sigma)
    return _finish(x, y, beta, res.rank, "svd-minnorm")


def observation_split(x, y, tol=DEFAULT_TOL):
    """Split an observation into its column-space and left-null-space parts.

    Returns ``(y_hat, e)`` with ``y_hat = X X^+ y`` and ``e = y - y_hat``;
    the residual satisfies ``X^T e = 0`` and ``X^+ e = 0`` up to rounding.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    y = as_vector(y, length=x.shape[0], name="y")
    y_hat = x @ (pinv_svd(x, tol) @ y)
    return y_hat, y - y_hat


def projector_column(x, tol=DEFAULT_TOL):
    """Orthogonal projector ``X X^+`` onto the column space (n by n)."""
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    return x @ pinv_svd(x, tol)


def projector_row(x, tol=DEFAULT_TOL):
    """Orthogonal projector ``X^+ X`` onto the row space (p by p)."""
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    return pinv_svd(x, tol) @ x


def projector_diagnostics(p, tol=DEFAULT_TOL):
    """Check the projector laws on a square matrix.

    Idempotence is ``||P^2 - P||_F`` against a band scaled by
    ``max(1, ||P||_F^2)``; the binary-spectrum check asks every eigenvalue
    to sit near 0 or 1 and is skipped (reported ``None``) when ``P`` is
    not symmetric.  For a symmetric idempotent the trace matches the rank.
    """
    p = as_matrix(p, "projector")
    tol = _as_tolerance(tol)
    if p.shape[0] != p.shape[1]:
        raise ShapeError(f"projector must be square, got {p.shape}")
    scale = frobenius_norm(p)
    idem = frobenius_norm(p @ p - p) <= 100.0 * tol.relative * max(1.0, scale * scale)
    sym = float(np.sqrt(np.sum((p - p.T) ** 2))) <= tol.relative * max(1.0, scale)
    spectrum_binary = None
    if sym:
        values = eig_symmetric((p + p.T) / 2.0, tol).values
        band = 100.0 * tol.relative * max(1.0, scale)
        spectrum_binary = bool(
            np.all(np.minimum(np.abs(values), np.abs(values - 1.0)) <= band)
        )
    return ProjectorReport(
        idempotent=bool(idem),
        symmetric=bool(sym),
        trace=float(np.trace(p)),
        rank=pivot_rank(p, tol),
        spectrum_binary=spectrum_binary,
    )


def consistent_unique_solve(x, y, tol=DEFAULT_TOL):
    """Solve ``X beta = y`` exactly when a unique solution exists.

    Requires full column rank.  Consistency is decided by the left-inverse
    test ``||(I - X X_L) y|| <= band * max(1, ||y||)``; an inconsistent
    observation raises an error carrying that residual norm instead of
    silently returning a best fit.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    n, p = x.shape
    y = as_vector(y, length=n, name="y")
    if pivot_rank(x, tol) < p:
        raise RankDeficientError(
            "a unique solution needs full column rank; "
            "use ls_svd_minnorm for the rank-deficient case"
        )
    glx = left_inverse(x, tol)
    beta = glx @ y
    gap = float(np.linalg.norm(y - x @ beta))
    band = max(100.0 * tol.relative, 1e-8) * max(1.0, float(np.linalg.norm(y)))
    if gap > band:
        raise InconsistentSystemError(
            f"system is inconsistent: left-inverse residual {gap:.3e} "
            f"exceeds {band:.3e}",
            residual_norm=gap,
        )
    return _finish(x, y, beta, p, "unique-consistent")


def right_solve(x, y, tol=DEFAULT_TOL):
    """Solve ``X beta = y`` through the right inverse; needs full row rank.

    With full row rank the system is solvable for every ``y``, and
    ``beta = X^T (X X^T)^{-1} y`` hits it exactly, so the residual is
    zero up to rounding.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    y = as_vector(y, length=x.shape[0], name="y")
    beta = right_inverse(x, tol) @ y
    return _finish(x, y, beta, x.shape[0], "right-inverse")
