"""Stabilized multiplication: structure constants as polynomials.

Shifting both factors by a*I and letting a grow, the product coefficients in
the size-(a*n + sigma) algebras eventually agree with integer-valued
polynomials in a.  The symbolic product computes those polynomials directly;
this script compares them with the finite products and with a Newton
interpolation of the observed values.
"""
from affschur import KElement, PeriodicMatrix, kmul, specialize_at_zero, stabilization_report, truncate_to_schur
from affschur.schur import SchurElement, mul

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag

b, a = E(2, 1, 2), E(2, 2, 1)
sym = kmul(KElement.basis(b), KElement.basis(a))
print("symbolic product [E(1,2)][E(2,1)]:")
for m, p in sym.sorted_terms():
    print("   ", p, "on", m)

# The defining property: evaluating the polynomials at a reproduces the
# finite products of the shifted matrices.
rep = stabilization_report(b, a, 1, 5)
print("finite values across the window a = 1..5:")
for row in rep["keys"]:
    print("   ", row["matrix"], row["values"], "->", row["interpolated"], "match:", row["match"])
print("stabilization verified:", rep["matched"])

# Specializing x -> 0 lands in the stabilized algebra over the integers.
print("at x = 0:", specialize_at_zero(sym))

# Truncating onto a fixed size keeps exactly the nonnegative matrices of
# that size; it is an algebra map onto the Schur algebra.
x = KElement.basis(E(2, 1, 2) + diag((1, 0)))
y = KElement.basis(E(2, 2, 1) + diag((1, 0)))
lhs = truncate_to_schur(kmul(x, y), 2)
rhs = mul(truncate_to_schur(x, 2), truncate_to_schur(y, 2))
print("truncation is multiplicative:", lhs == rhs, "->", lhs)

# A negative-diagonal key truncates to zero: the convention that makes the
# truncation well defined.
print("negative diagonal truncates to zero:",
      truncate_to_schur(KElement.basis(E(2, 1, 2) + E(2, 2, 1) + diag((0, -1))), 2) == SchurElement.zero(2, 2))
