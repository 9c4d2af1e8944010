"""Least squares as geometry: project, then read off the estimate.

The observation y splits into a part inside the column space of X and a
residual in the left null space.  With full column rank, the normal
equation finds the unique estimate behind that projection.  Without it,
infinitely many estimates fit equally well; the SVD route picks the one of
minimal norm, the one lying entirely in the row space.
"""

import numpy as np

from fourspaces import (
    InconsistentSystemError,
    consistent_unique_solve,
    fundamental_bases,
    ls_normal,
    ls_svd_minnorm,
    observation_split,
    projector_column,
    projector_diagnostics,
    right_solve,
)

np.set_printoptions(precision=4, suppress=True)

x = np.array([[1.0, 0.0], [1.0, 1.0], [1.0, 2.0]])
y = np.array([1.0, 0.0, 2.0])
print("x (3x2 full column rank), y =", y)

sol = ls_normal(x, y)
print("\nnormal equation estimate:", sol.beta_hat)
print("projection y_hat:", sol.y_hat)
print("residual e:      ", sol.residual, " norm:", round(sol.residual_norm, 4))
print("X'e is zero (residual is orthogonal to the columns):", x.T @ sol.residual)

agree = ls_svd_minnorm(x, y)
print("\nthe SVD route agrees at full rank:", agree.beta_hat)

rankdef = np.array([[1.0, 1.0], [1.0, 1.0]])
y2 = np.array([2.0, 4.0])
minnorm = ls_svd_minnorm(rankdef, y2)
print("\nrank-deficient system, minimum-norm estimate:", minnorm.beta_hat)
null = fundamental_bases(rankdef).null_space
other = minnorm.beta_hat + null[:, 0]
print("any null-space shift fits equally well but is longer:")
print("  ", float(np.linalg.norm(minnorm.beta_hat)), "vs", float(np.linalg.norm(other)))

y_hat, e = observation_split(rankdef, y2)
print("\nobservation split: y_hat =", y_hat, ", e =", e)

h = projector_column(x)
rep = projector_diagnostics(h)
print("\nhat matrix of the tall x: idempotent", rep.idempotent,
      ", symmetric", rep.symmetric, ", trace", round(rep.trace, 4), "= rank", rep.rank)

print("\nexact solves when the shape allows them:")
print("  unique:", consistent_unique_solve(x, x @ np.array([0.5, -1.0])).beta_hat)
try:
    consistent_unique_solve(x, y)
except InconsistentSystemError as exc:
    print("  off the column space -> inconsistent, residual", round(exc.residual_norm, 4))

wide = np.array([[1.0, 1.0, 0.0]])
print("  underdetermined through the right inverse:", right_solve(wide, [3.0]).beta_hat)
