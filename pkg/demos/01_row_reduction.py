"""Row reduction with the transform on the side.

Gauss-Jordan elimination is usually presented as something that happens to
a matrix.  Here the elimination itself is a matrix: every swap, scale and
clear is accumulated on an identity, so at the end `transform @ x` equals
the reduced form exactly.  For a nonsingular input that accumulated
transform is the inverse.
"""

import numpy as np

from fourspaces import invert, pivot_rank, rref_cols, rref_rows

np.set_printoptions(precision=4, suppress=True)

x = np.array([[1.0, 2.0, 0.0], [2.0, 4.0, 1.0], [3.0, 6.0, 1.0]])
print("x =")
print(x)

res = rref_rows(x)
print("\nreduced row form:")
print(res.reduced)
print(f"pivot columns: {res.pivot_cols}, rank: {res.pivot_rank}")

print("\nthe transform reproduces the reduction: transform @ x =")
print(res.transform @ x)

print("\nrows past the rank are exact zeros:", bool(np.all(res.reduced[res.pivot_rank:] == 0.0)))

cols = rref_cols(x)
print("\ncolumn reduction of the same matrix:")
print(cols.reduced)
print(f"pivot rows: {cols.pivot_cols}")

print(f"\nrank by rows equals rank by columns: {res.pivot_rank} == {cols.pivot_rank}")

square = np.array([[2.0, 1.0], [1.0, 1.0]])
inv = invert(square)
print("\nfor a nonsingular matrix the transform is the inverse:")
print(inv)
print("check square @ inverse =")
print(square @ inv)

print(f"\npivot_rank of a rank-one 2x2: {pivot_rank([[1.0, 2.0], [2.0, 4.0]])}")
