"""From one-sided inverses to the pseudo inverse, one weakening at a time.

A tall full-column-rank matrix has left inverses; a wide full-row-rank one
has right inverses; a rank-deficient matrix has neither, but it always has
generalized inverses satisfying X G X = X, reflexive ones adding
G X G = G, and exactly one pseudo inverse satisfying all four Penrose
identities.  Each stage below is built by an explicit construction and
then handed to the classifier, which recomputes the identities without
knowing where the candidate came from.
"""

import numpy as np

from fourspaces import (
    classify_inverse,
    ginverse_extend,
    left_inverse,
    left_inverse_elementary,
    left_inverse_family,
    pinv_cr,
    pinv_svd,
    rg_canonical,
    rg_sandwich,
    right_inverse,
)

np.set_printoptions(precision=4, suppress=True)


def show(name, x, g):
    rep = classify_inverse(x, g)
    f = rep.flags
    marks = "".join("1234"[i] if flag else "-" for i, flag in enumerate((f.c1, f.c2, f.c3, f.c4)))
    extras = []
    if rep.is_left_inverse:
        extras.append("left")
    if rep.is_right_inverse:
        extras.append("right")
    tail = f"  ({', '.join(extras)})" if extras else ""
    print(f"  {name:24s} penrose {marks}  ->  {rep.class_label}{tail}")


tall = np.array([[1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
print("tall, full column rank:")
show("normal-equation left", tall, left_inverse(tall))
show("elementary left", tall, left_inverse_elementary(tall))
show("family member", tall, left_inverse_family(tall, [[0.3], [0.7]]))

wide = tall.T
print("\nwide, full row rank:")
show("normal-equation right", wide, right_inverse(wide))

rankdef = np.array([[1.0, 2.0], [2.0, 4.0], [3.0, 6.0]])
print("\nrank-deficient (rank 1):")
g = rg_canonical(rankdef)
show("canonical reflexive", rankdef, g)

free = rg_canonical(rankdef, np.array([[1.0, -1.0]]), np.array([[2.0]]))
show("reflexive, free blocks", rankdef, free)

extended = ginverse_extend(rankdef, g, np.ones((2, 3)))
show("extended g-inverse", rankdef, extended)

sandwiched = rg_sandwich(rankdef, extended, free)
show("sandwich of the two", rankdef, sandwiched)

plus = pinv_svd(rankdef)
show("pseudo inverse (svd)", rankdef, plus)
show("pseudo inverse (cr)", rankdef, pinv_cr(rankdef))

print("\nthe two pseudo-inverse routes agree (uniqueness):")
print("  ||svd route - cr route|| =", float(np.linalg.norm(plus - pinv_cr(rankdef))))

print("\nnot every candidate is an inverse of anything:")
show("identity-sized guess", rankdef, np.ones((2, 3)))
