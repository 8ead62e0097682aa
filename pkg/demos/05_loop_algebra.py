"""The integral loop-algebra realization and its evaluation maps.

Symbols A<lam> form an integer basis of a subalgebra of the completed
stabilized algebra isomorphic to the integral enveloping algebra of the
loop algebra.  Products go through generator words; evaluation maps send the
symbols onto every finite Schur algebra, surjectively over the integers.
"""
from affschur import (
    PBWMonomial,
    PeriodicMatrix,
    VElement,
    eval_at_level,
    from_pbw,
    from_power_basis,
    generator_words,
    loop_relations_report,
    surjectivity_certificates,
    to_power_basis,
    vmul,
)
from affschur.loopalg import coproduct_word
from affschur.schur import mul

E = PeriodicMatrix.unit
Z = PeriodicMatrix.zero(2)
bas = VElement.basis

# The raising/lowering commutator: the Cartan difference, exactly.
ee, ff = bas(E(2, 1, 2), (0, 0)), bas(E(2, 2, 1), (0, 0))
print("[e, f] =", vmul(ee, ff) - vmul(ff, ee))

# Squares produce divided powers with their binomial multiplicities.
print("e * e =", vmul(ee, ee))

# Any symbol is an integer combination of generator words; here the mixed
# symbol needs a correction by a diagonal generator.
for word, c in generator_words(E(2, 1, 2) + E(2, 2, 1), (0, 0)):
    print("word", word, "coeff", c)

# The power basis is rational; conversions are exact and mutually inverse.
x = bas(Z, (2, 0))
print("binomial symbol in the power basis:", to_power_basis(x))
print("round trip:", from_power_basis(to_power_basis(x)) == x)

# Evaluation at level r is an algebra map onto the Schur algebra.
r = 3
lhs = eval_at_level(vmul(ee, ff), r)
rhs = mul(eval_at_level(ee, r), eval_at_level(ff, r))
print(f"evaluation at r={r} is multiplicative:", lhs == rhs)

# Monomials in the enveloping-algebra generators evaluate through the same
# machinery.
mono = PBWMonomial(2, upper={(1, 2): 2}, diag=(1, 0))
print("monomial image:", from_pbw(mono))

# The defining relations hold inside the realization.
rep = loop_relations_report(2, 2)
print(f"loop relations n=2, window 2: {rep['passed']}/{rep['checked']} hold")

# The coproduct of a generator word, multiplied out in the tensor square.
print("coproduct of the raising generator:")
for (k1, k2), c in sorted(coproduct_word(2, [("E", (1, 0))]).items(), key=str):
    print("   ", c, "*", k1, "(x)", k2)

# Integral surjectivity: every basis matrix of the size-2 algebra is an
# integer combination of evaluated triangular elements.
rep = surjectivity_certificates(2, 2, 1)
print(f"surjectivity certificates: {rep['verified']}/{rep['count']} verified,",
      f"{rep['non_integer_steps']} non-integer steps")
example = rep["certificates"][1]
print("example certificate for", example["matrix"], "->", example["combination"])
