"""The affine symmetric group, double cosets, and the convolution oracle.

Basis elements of the size-r algebra correspond to double cosets of finite
Young subgroups inside the extended affine symmetric group.  The oracle
multiplies two basis elements purely by coset enumeration, with no closed
formulas: it is the independent referee for everything else in the package.
"""
from affschur import (
    AffinePermutation,
    PeriodicMatrix,
    coset_to_matrix,
    double_coset,
    matrix_to_coset,
    oracle_mul,
    young_subgroup,
)

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag

# Window notation: the element is determined by its values on 1..r and
# commutes with the shift by r.
s1 = AffinePermutation.simple(2, 1)
rho = AffinePermutation.rotation(2)
print("s1 window:", s1.window, " s1(3) =", s1(3))
print("rho window:", rho.window, " (translation part: not in the plain affine Weyl group)")
print("s1 * rho window:", (s1 * rho).window)

# Young subgroups are finite: all permutations preserving the blocks of a
# composition of r.
print("subgroup of (2,0):", sorted(w.window for w in young_subgroup((2, 0))))
print("double coset of the identity for (2,0) vs (1,1):",
      sorted(w.window for w in double_coset((2, 0), AffinePermutation.identity(2), (1, 1))))

# The block-intersection matrix identifies each double coset with a
# nonnegative periodic matrix, and back.
m = E(2, 1, 2) + E(2, 2, 1)
triple = matrix_to_coset(m)
print("matrix", m, "corresponds to", triple)
print("round trip:", coset_to_matrix(triple.lam, triple.d, triple.mu) == m)

# A convolution product, computed entirely from cosets.  The multiplicity of
# each target double coset is read off a tally of left-coset keys.
b = E(2, 1, 2) + diag((2, 0))
a = E(2, 1, 2) + diag((1, 1))
print(f"oracle: [{b!r}] [{a!r}] =", oracle_mul(b, a))

# Squaring the antidiagonal basis element of size 2 gives the diagonal
# idempotent: (a simple reflection squares to the identity).
sq = E(2, 1, 2) + E(2, 2, 1)
print("oracle square:", oracle_mul(sq, sq))
