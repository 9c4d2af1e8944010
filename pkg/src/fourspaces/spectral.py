"""Symmetric eigendecomposition by cyclic Jacobi rotations.

The decomposition is fully constructive: plane rotations are accumulated
into the orthogonal factor, so ``s == q @ diag(values) @ q.T`` up to
roundoff with no reliance on an external eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, NotSymmetricError, ShapeError
from .matrix import DEFAULT_TOL, _as_tolerance, as_matrix, frobenius_norm, invert, pivot_rank

__all__ = ["EigResult", "SimilarityReport", "eig_symmetric", "similarity_check", "MAX_SWEEPS"]

MAX_SWEEPS = 50


@dataclass(frozen=True)
class EigResult:
    """Eigenvalues in descending order and the orthogonal eigenvector matrix.

    Column ``q[:, i]`` belongs to ``values[i]``; each column is scaled so its
    largest-magnitude component is positive, ties resolved by lowest index.
    """

    values: np.ndarray
    q: np.ndarray


@dataclass(frozen=True)
class SimilarityReport:
    """What conjugation by a nonsingular matrix preserved.

    ``eigs_match`` is None when the conjugating matrix is not orthogonal,
    because only orthogonal conjugation keeps the matrix symmetric and hence
    inside this module's eigensolver domain; rank and trace are compared for
    any nonsingular conjugation.
    """

    eigs_match: bool | None
    rank_match: bool
    trace_match: bool


def _offdiag_norm(a):
    # summed directly off the diagonal: the subtraction ||a||^2 - ||diag||^2
    # cancels catastrophically once the true value is below sqrt(eps)*||a||
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return math.sqrt(np.sum(off * off))


def _sweep(a, q):
    """One cyclic pass over all off-diagonal pairs, rotations accumulated in q."""
    n = a.shape[0]
    for i in range(n - 1):
        for j in range(i + 1, n):
            aij = a[i, j]
            if aij == 0.0:
                continue
            diff = a[j, j] - a[i, i]
            if abs(diff) > 1e12 * abs(aij):
                # rotation angle is below rounding; the large-tau limit of the
                # exact formula avoids overflow in the quotient
                t = aij / diff
            else:
                tau = diff / (2.0 * aij)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
            c = 1.0 / math.hypot(1.0, t)
            s = t * c
            ci = a[:, i].copy()
            cj = a[:, j].copy()
            a[:, i] = c * ci - s * cj
            a[:, j] = s * ci + c * cj
            ri = a[i, :].copy()
            rj = a[j, :].copy()
            a[i, :] = c * ri - s * rj
            a[j, :] = s * ri + c * rj
            # the rotation annihilates this pair analytically; pin the zeros
            a[i, j] = 0.0
            a[j, i] = 0.0
            qi = q[:, i].copy()
            qj = q[:, j].copy()
            q[:, i] = c * qi - s * qj
            q[:, j] = s * qi + c * qj


def eig_symmetric(s, tol=DEFAULT_TOL):
    """Eigendecomposition of a symmetric matrix.

    Parameters
    ----------
    s : (p, p) array_like
        Symmetric matrix; symmetry is enforced up to
        ``tol.relative * ||s||_F`` and the working copy is symmetrized.
    tol : Tolerance or float, optional
        Sweeping stops once the off-diagonal Frobenius norm falls below
        ``tol.relative * ||s||_F``.

    Returns
    -------
    EigResult

    Raises
    ------
    NotSymmetricError
        If ``s`` is further from its transpose than the tolerance allows.
    ConvergenceError
        If the off-diagonal mass has not fallen below the threshold after
        50 sweeps.

    Notes
    -----
    After the acceptance threshold is met one extra sweep runs.  Convergence
    is quadratic at that point, so the polish costs next to nothing and pushes
    near-zero eigenvalues from tolerance level down to rounding level, which
    keeps downstream rank decisions out of the noise band.
    """
    s = as_matrix(s)
    tol = _as_tolerance(tol)
    n, p = s.shape
    if n != p:
        raise ShapeError(f"eigendecomposition needs a square matrix, got {s.shape}")
    scale = frobenius_norm(s)
    if frobenius_norm(s - s.T) > tol.relative * scale:
        raise NotSymmetricError(
            "matrix is not symmetric within tolerance "
            f"(asymmetry {frobenius_norm(s - s.T):.3e} vs bound {tol.relative * scale:.3e})"
        )
    work = (s + s.T) / 2.0
    q = np.eye(n)
    threshold = tol.relative * scale
    sweeps = 0
    while _offdiag_norm(work) > threshold:
        if sweeps == MAX_SWEEPS:
            raise ConvergenceError(
                f"off-diagonal norm {_offdiag_norm(work):.3e} still above "
                f"{threshold:.3e} after {MAX_SWEEPS} sweeps"
            )
        _sweep(work, q)
        sweeps += 1
    if n > 1 and _offdiag_norm(work) > 0.0:
        _sweep(work, q)
    values = np.diag(work).copy()
    order = np.argsort(-values, kind="stable")
    values = values[order]
    q = q[:, order]
    for j in range(n):
        k = int(np.argmax(np.abs(q[:, j])))
        if q[k, j] < 0.0:
            q[:, j] = -q[:, j]
    return EigResult(values, q)


def similarity_check(a, p, tol=DEFAULT_TOL):
    """Verify what ``p @ a @ p^-1`` preserves: spectrum, rank, and trace.

    ``a`` must be square symmetric and ``p`` square nonsingular.  The
    eigenvalue comparison runs only when ``p`` is orthogonal (otherwise the
    conjugate leaves the symmetric domain) and is reported as None in that
    case; rank and trace are compared for every nonsingular ``p``.
    """
    a = as_matrix(a, "matrix")
    p = as_matrix(p, "conjugating matrix")
    tol = _as_tolerance(tol)
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    if p.shape != a.shape:
        raise ShapeError(f"conjugating matrix must be {a.shape}, got {p.shape}")
    if frobenius_norm(a - a.T) > tol.relative * frobenius_norm(a):
        raise NotSymmetricError("similarity check is defined for symmetric matrices")
    b = p @ a @ invert(p, tol)
    scale = max(1.0, abs(float(np.trace(a))), frobenius_norm(a))
    trace_match = bool(abs(float(np.trace(b)) - float(np.trace(a))) <= 100 * tol.relative * scale)
    rank_match = pivot_rank(a, tol) == pivot_rank(b, tol)
    gram = p.T @ p
    orthogonal = frobenius_norm(gram - np.eye(n)) <= 100 * tol.relative * max(1.0, math.sqrt(n))
    if orthogonal:
        ea = eig_symmetric(a, tol)
        eb = eig_symmetric(b, tol)
        spread = max(1.0, float(np.max(np.abs(ea.values))) if n else 1.0)
        eigs_match = bool(np.max(np.abs(ea.values - eb.values)) <= 100 * tol.relative * spread)
    else:
        eigs_match = None
    return SimilarityReport(eigs_match, rank_match, trace_match)
