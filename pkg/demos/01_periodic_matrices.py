"""Periodic matrices, weights, and the combinatorial orders.

Everything in this package is indexed by n-periodic integer matrices with
finite band support.  This script walks through the basic bookkeeping: row
and column sums, hook sums, the corner order, and the band norm.
"""
from affschur import PeriodicMatrix, corner_leq, corner_lt, theta_matrices

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag

# A periodic matrix is stored on rows 1..n; entry (3, 4) for n = 2 is the
# same as entry (1, 2) shifted one period.
a = PeriodicMatrix(2, [(3, 4, 1), (2, 1, 1)])
print("canonical form:", a)
print("entry (1,2):", a.get(1, 2), " entry (-1,0):", a.get(-1, 0))

# Row and column sums are weights (length-n tuples); the total band sum is
# the size r of the algebra the matrix indexes.
print("row sums:", a.row_sums(), " col sums:", a.col_sums(), " size:", a.entry_sum())

# Hook sums: entry (i,i) plus everything in row i to the left and column i
# above, over the full periodic extension.  They give the diagonal weight
# of the triangular basis element attached to the matrix.
print("hook sums of E(1,2)+E(2,1):", a.hook_sums())
print("hook sums of diag(3,5):", diag((3, 5)).hook_sums())

# The corner order compares staircase partial sums at every off-diagonal
# position; lower terms in every triangular statement are strictly smaller
# here, with the same row and column sums.
d = diag((1, 1))
print("diag(1,1) strictly below E(1,2)+E(2,1):", corner_lt(d, a))
print("E(1,2) comparable with E(2,1):", corner_leq(E(2, 1, 2), E(2, 2, 1)))

# The band norm weighs each entry by a triangular number of its distance to
# the diagonal; it strictly decreases along the corner order, which is what
# makes the chunk recursions terminate.
for m in [d, a, E(2, 1, 3), E(2, 1, 4)]:
    print(f"band norm of {m!r}: {m.band_norm()}")

# Enumerating an index window: all nonnegative matrices of size 2 with
# support within distance 1 of the diagonal.
mats = theta_matrices(2, 2, 1)
print(f"{len(mats)} matrices of size 2 in the tridiagonal window, e.g. {mats[:3]}")
