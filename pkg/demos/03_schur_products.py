"""Products in the integral affine Schur algebra.

Semisimple generators (off-diagonal support on the first super- or
subdiagonal) multiply by a closed transfer-matrix formula; a general basis
element is decomposed into semisimple chunks whose product is unitriangular
against the corner order, and the product recurses down that order.
"""
from affschur import (
    PeriodicMatrix,
    SchurElement,
    brace,
    bracket,
    chunk_decomposition,
    mul,
    mul_ss_upper,
    oracle_mul,
    radical_word,
    tau,
    triangular_basis,
)

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag

# The raising formula: one transfer matrix survives the caps here and its
# binomial weight is 2.
b = E(2, 1, 2) + diag((2, 0))
a = E(2, 1, 2) + diag((1, 1))
print("semisimple product:", mul_ss_upper(b, SchurElement.basis(a)))
print("same from the oracle:", oracle_mul(b, a))

# Radical words drive the chunk decomposition: layer weights of the radical
# filtration of the attached nilpotent representation.
print("radical word of E(1,4), n=2:", radical_word(E(2, 1, 4)))
m = E(2, 1, 2) + E(2, 2, 1)
print("chunks of E(1,2)+E(2,1):", chunk_decomposition(m))

# The general product; the chunk product is [m] + lower, and the recursion
# subtracts the lower terms.
x = SchurElement.basis(m)
print("[m]^2 =", mul(x, x))

# The transpose anti-involution swaps the two closed formulas.
y = SchurElement.basis(E(2, 1, 1) + E(2, 1, 2))
print("tau transport holds:", tau(mul(y, x)) == mul(tau(x), tau(y)))

# Distinguished families: the binomial-weighted diagonal sums and the
# power-weighted sums.
print("identity of size 2:", brace(PeriodicMatrix.zero(2), (0, 0), 2))
print("first power sum:", bracket(PeriodicMatrix.zero(2), (1, 0), 2))

# Triangular basis elements: unit leading coefficient, strictly lower tail.
tb = triangular_basis(m, (0, 2), 2)
print("triangular element at the hook weight:", tb)
