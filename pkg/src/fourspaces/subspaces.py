"""Orthonormal bases for the four fundamental subspaces of a matrix.

Everything derives from the full singular value decomposition: the leading
columns of ``v`` and ``u`` span the row space and column space, the silent
columns span the null space and left null space, and the dimensions add up
to the rank-nullity identities by construction.

Bases are passed around as 2-D arrays whose *columns* are the basis
vectors; a subspace of dimension zero is a ``(dim, 0)`` array.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentBasisError, NonFiniteEntryError, NotInRowSpaceError, ShapeError
from .factorizations import svd_full
from .matrix import DEFAULT_TOL, _as_tolerance, as_matrix, frobenius_norm, pivot_rank

__all__ = [
    "SubspaceBases",
    "RankNullityReport",
    "fundamental_bases",
    "column_basis_from_row_basis",
    "rank_nullity_report",
    "subspaces_equal",
]


@dataclass(frozen=True)
class SubspaceBases:
    """Column-wise orthonormal bases of the four subspaces, plus the rank."""

    row_space: np.ndarray
    null_space: np.ndarray
    column_space: np.ndarray
    left_null_space: np.ndarray
    rank: int


@dataclass(frozen=True)
class RankNullityReport:
    """Subspace dimensions; ``rank + dim_null == n_cols`` and ``rank + dim_left_null == n_rows``."""

    rank: int
    dim_null: int
    dim_left_null: int
    n_rows: int
    n_cols: int


def _as_basis(b, name="basis"):
    """A (dim, k) array of column vectors; k may be zero, dim may not."""
    arr = np.asarray(b, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2 or arr.shape[0] < 1:
        raise ShapeError(f"{name} must be a (dim, k) array of column vectors, got shape {arr.shape}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError(f"{name} contains NaN or infinite entries")
    return arr


def fundamental_bases(x, tol=DEFAULT_TOL):
    """Split the SVD factors into the four orthonormal bases."""
    x = as_matrix(x)
    res = svd_full(x, tol)
    r = res.rank
    return SubspaceBases(
        row_space=res.v[:, :r].copy(),
        null_space=res.v[:, r:].copy(),
        column_space=res.u[:, :r].copy(),
        left_null_space=res.u[:, r:].copy(),
        rank=r,
    )


def rank_nullity_report(x, tol=DEFAULT_TOL):
    """Dimensions of all four subspaces of ``x``."""
    x = as_matrix(x)
    bases = fundamental_bases(x, tol)
    n, p = x.shape
    return RankNullityReport(
        rank=bases.rank,
        dim_null=p - bases.rank,
        dim_left_null=n - bases.rank,
        n_rows=n,
        n_cols=p,
    )


def column_basis_from_row_basis(x, row_basis, tol=DEFAULT_TOL):
    """Map a basis of the row space through ``x`` into a basis of the column space.

    Each supplied column must actually lie in the row space (its projection
    onto the fundamental row-space basis must preserve it) and the columns
    must be linearly independent; the images ``x @ row_basis`` then form a
    basis of the column space, though not generally an orthonormal one.
    """
    x = as_matrix(x)
    tol = _as_tolerance(tol)
    rb = _as_basis(row_basis, "row basis")
    n, p = x.shape
    if rb.shape[0] != p:
        raise ShapeError(f"row basis vectors must have length {p}, got {rb.shape[0]}")
    k = rb.shape[1]
    if k == 0:
        return np.zeros((n, 0))
    bases = fundamental_bases(x, tol)
    proj = bases.row_space @ (bases.row_space.T @ rb)
    band = max(100.0 * tol.relative, 1e-8)
    for j in range(k):
        drift = float(np.sqrt(np.sum((proj[:, j] - rb[:, j]) ** 2)))
        if drift > band * max(1.0, float(np.sqrt(np.sum(rb[:, j] ** 2)))):
            raise NotInRowSpaceError(
                f"column {j} of the supplied basis leaves the row space "
                f"(projection drift {drift:.3e})"
            )
    if pivot_rank(rb, tol) < k:
        raise DependentBasisError("supplied row-space vectors are linearly dependent")
    return x @ rb


def subspaces_equal(basis_a, basis_b, tol=DEFAULT_TOL):
    """Whether two column bases span the same subspace.

    Compares the orthogonal projectors ``a @ a.T`` and ``b @ b.T``, which is
    basis-independent for orthonormal inputs; the comparison band is
    ``1e-8 * max(1, k)``, widening only if ``tol`` is coarser than that.
    """
    tol = _as_tolerance(tol)
    a = _as_basis(basis_a, "first basis")
    b = _as_basis(basis_b, "second basis")
    if a.shape[0] != b.shape[0]:
        raise ShapeError(
            f"bases live in different ambient dimensions: {a.shape[0]} vs {b.shape[0]}"
        )
    k = max(a.shape[1], b.shape[1])
    gap = frobenius_norm(a @ a.T - b @ b.T)
    return bool(gap <= max(1.0, float(k)) * max(100.0 * tol.relative, 1e-8))
