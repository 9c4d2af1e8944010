"""Dense real matrix kernels.

Validation, Frobenius norms, and reduced row (and column) echelon
factorizations that track the elementary transform applied, so every
downstream construction can reuse the transform instead of refactoring.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteEntryError, ShapeError, SingularMatrixError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "RrefResult",
    "as_matrix",
    "as_vector",
    "frobenius_norm",
    "matmul",
    "rref_rows",
    "rref_cols",
    "pivot_rank",
    "invert",
]


@dataclass(frozen=True)
class Tolerance:
    """Relative tolerance scaling every comparison threshold in the library.

    Each operation documents the scale it multiplies ``relative`` by; the
    value itself is dimensionless and must sit strictly inside (0, 1).
    """

    relative: float = 1e-10

    def __post_init__(self):
        rel = float(self.relative)
        if not (0.0 < rel < 1.0):
            raise ValueError(
                f"tolerance must satisfy 0 < relative < 1, got {self.relative!r}"
            )
        object.__setattr__(self, "relative", rel)


DEFAULT_TOL = Tolerance()


def _as_tolerance(tol):
    if tol is None:
        return DEFAULT_TOL
    if isinstance(tol, Tolerance):
        return tol
    return Tolerance(float(tol))


def as_matrix(a, name="matrix"):
    """Coerce to a 2-D float array, rejecting empty shapes and non-finite entries."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got ndim={arr.ndim}")
    n, p = arr.shape
    if n < 1 or p < 1:
        raise ShapeError(f"{name} must have positive dimensions, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError(f"{name} contains NaN or infinite entries")
    return arr


def as_vector(a, length=None, name="vector"):
    """Coerce to a 1-D float array; a single-row or single-column 2-D input is flattened."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be 1-D, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteEntryError(f"{name} contains NaN or infinite entries")
    if length is not None and arr.shape[0] != length:
        raise ShapeError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def frobenius_norm(a):
    """Square root of the sum of squared entries."""
    arr = as_matrix(a)
    return float(np.sqrt(np.sum(arr * arr)))


def matmul(a, b):
    """Matrix product with an explicit conformability check."""
    a = as_matrix(a, "left operand")
    b = as_matrix(b, "right operand")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


@dataclass(frozen=True)
class RrefResult:
    """Echelon form together with the elementary transform that produced it.

    For ``rref_rows``: ``transform @ a == reduced`` with ``transform`` square
    and nonsingular, and ``pivot_cols`` listing the pivot column indices in
    order.  For ``rref_cols`` the relation is ``a @ transform == reduced`` and
    ``pivot_cols`` holds the pivot *row* indices of the column-reduced form.
    """

    reduced: np.ndarray
    transform: np.ndarray
    pivot_cols: tuple
    pivot_rank: int


def rref_rows(a, tol=DEFAULT_TOL):
    """Reduced row echelon form with the accumulated row transform.

    Parameters
    ----------
    a : (n, p) array_like
        Matrix to reduce.
    tol : Tolerance or float, optional
        A candidate pivot is accepted only if its magnitude exceeds
        ``tol.relative * max(abs(a))``; the scale is fixed by the input, so
        the factorization is invariant under scalar rescaling of ``a``.

    Returns
    -------
    RrefResult
        ``reduced`` is the echelon form, ``transform`` the square nonsingular
        matrix with ``transform @ a == reduced`` up to roundoff, ``pivot_cols``
        the pivot columns in order and ``pivot_rank`` their count.

    Notes
    -----
    Elimination is Gauss-Jordan with partial pivoting: within each column the
    largest-magnitude candidate below the current row is chosen, ties going to
    the lowest row index.  Pivot rows are scaled to a unit leading entry and
    the pivot column is cleared above and below.  Columns whose best candidate
    falls under the acceptance threshold are flushed to exact zeros below the
    current row, so ``pivot_rank`` always equals the number of nonzero rows.
    """
    a = as_matrix(a)
    tol = _as_tolerance(tol)
    n, p = a.shape
    reduced = a.copy()
    transform = np.eye(n)
    threshold = tol.relative * np.max(np.abs(a))
    pivots = []
    row = 0
    for col in range(p):
        if row == n:
            break
        candidates = np.abs(reduced[row:, col])
        k = int(np.argmax(candidates))
        if candidates[k] <= threshold:
            reduced[row:, col] = 0.0
            continue
        piv = row + k
        if piv != row:
            reduced[[row, piv], :] = reduced[[piv, row], :]
            transform[[row, piv], :] = transform[[piv, row], :]
        lead = reduced[row, col]
        reduced[row, :] /= lead
        transform[row, :] /= lead
        factors = reduced[:, col].copy()
        factors[row] = 0.0
        reduced -= np.outer(factors, reduced[row, :])
        transform -= np.outer(factors, transform[row, :])
        # f - f*1 is exact in IEEE arithmetic, but pin the pivot column anyway
        reduced[:, col] = 0.0
        reduced[row, col] = 1.0
        pivots.append(col)
        row += 1
    return RrefResult(reduced, transform, tuple(pivots), len(pivots))


def rref_cols(a, tol=DEFAULT_TOL):
    """Column-echelon companion of :func:`rref_rows`.

    Reduces by elementary column operations via the transposed problem and
    returns ``reduced = a @ transform`` with ``pivot_cols`` holding the pivot
    row indices.
    """
    res = rref_rows(as_matrix(a).T, tol)
    return RrefResult(
        np.ascontiguousarray(res.reduced.T),
        np.ascontiguousarray(res.transform.T),
        res.pivot_cols,
        res.pivot_rank,
    )


def pivot_rank(a, tol=DEFAULT_TOL):
    """Number of accepted pivots in the row echelon form."""
    return rref_rows(a, tol).pivot_rank


def invert(a, tol=DEFAULT_TOL):
    """Inverse of a square nonsingular matrix via the tracked row reduction.

    The row transform that carries ``a`` to the identity *is* the inverse, so
    no separate elimination pass is needed.
    """
    a = as_matrix(a)
    n, p = a.shape
    if n != p:
        raise ShapeError(f"only square matrices invert, got {a.shape}")
    res = rref_rows(a, tol)
    if res.pivot_rank < n:
        raise SingularMatrixError(
            f"matrix is singular at the working tolerance (pivot rank {res.pivot_rank} of {n})"
        )
    return res.transform
