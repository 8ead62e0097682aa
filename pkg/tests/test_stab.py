import pytest

from affschur.intpoly import IP_ONE, IntPoly
from affschur.periodic import PeriodicMatrix, theta_matrices
from affschur.schur import SchurElement, mul
from affschur.stab import (
    KElement,
    kmul,
    kmul_ss_lower,
    kmul_ss_upper,
    specialize_at_zero,
    stabilization_report,
    truncate_to_schur,
)
from conftest import complete_to_row_sums, random_tilde_matrix

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag
XP1 = IntPoly({0: 1, 1: 1})


def test_kelement_container():
    x = KElement.basis(E(2, 1, 2))
    assert (x + x.scale(-1)).is_zero()
    with pytest.raises(ValueError):
        KElement(2, {E(2, 1, 2).scale(-1): IP_ONE})


def test_symbolic_upper_example():
    got = kmul_ss_upper(E(2, 1, 2), KElement.basis(E(2, 2, 1)))
    want = KElement(2, {E(2, 1, 1): XP1, E(2, 1, 2) + E(2, 2, 1) + diag((0, -1)): IP_ONE})
    assert got == want


def test_symbolic_lower_example():
    got = kmul_ss_lower(E(2, 2, 1), KElement.basis(E(2, 1, 2)))
    want = KElement(2, {E(2, 2, 2): XP1, E(2, 1, 2) + E(2, 2, 1) + diag((-1, 0)): IP_ONE})
    assert got == want


def test_symbolic_diagonal_identity():
    a = E(2, 2, 1)
    assert kmul_ss_upper(diag(a.row_sums()), KElement.basis(a)) == KElement.basis(a)


def test_symbolic_matches_finite_at_shifts():
    """The polynomial coefficients evaluated at a reproduce the finite
    products of the shifted matrices: the defining property."""
    b, a = E(2, 1, 2), E(2, 2, 1)
    sym = kmul(KElement.basis(b), KElement.basis(a))
    from affschur.schur import _basis_mul

    for c in range(1, 6):
        fin = _basis_mul(b.shift_diag(c), a.shift_diag(c))
        reconstructed = {m.shift_diag(-c): v for m, v in fin.terms.items()}
        evaluated = {m: p.eval_at(c) for m, p in sym.terms.items() if p.eval_at(c)}
        assert reconstructed == evaluated, c


def test_kmul_general_agrees_with_ss_route():
    b, a = E(2, 1, 2), E(2, 2, 1)
    assert kmul(KElement.basis(b), KElement.basis(a)) == kmul_ss_upper(b, KElement.basis(a))


def test_kmul_diagonal_cases():
    a = E(2, 1, 2) + diag((0, -2))
    assert kmul(KElement.basis(diag(a.row_sums())), KElement.basis(a)) == KElement.basis(a)
    assert kmul(KElement.basis(diag((5, 5))), KElement.basis(a)).is_zero()


def test_kmul_associativity_seeded(rng):
    done = 0
    while done < 20:
        b = random_tilde_matrix(rng, 2, 2, 2)
        aoff = random_tilde_matrix(rng, 2, 2, 2)
        a = complete_to_row_sums(aoff.upper_part() + aoff.lower_part(), b.col_sums())
        coff = random_tilde_matrix(rng, 2, 2, 2)
        c = complete_to_row_sums(coff.upper_part() + coff.lower_part(), a.col_sums())
        xb, xa, xc = KElement.basis(b), KElement.basis(a), KElement.basis(c)
        assert kmul(kmul(xb, xa), xc) == kmul(xb, kmul(xa, xc)), (b, a, c)
        done += 1


def test_specialize_at_zero():
    x = KElement(2, {E(2, 1, 1): XP1, E(2, 1, 2): IntPoly({2: 1}), E(2, 2, 2): IntPoly({0: 3})})
    assert specialize_at_zero(x) == {E(2, 1, 1): 1, E(2, 2, 2): 3}


def test_truncation():
    assert truncate_to_schur(KElement.basis(E(2, 1, 2) + E(2, 2, 1) + diag((0, -1))), 2).is_zero()
    assert truncate_to_schur(KElement.basis(diag((1, 1))), 2) == SchurElement.basis(diag((1, 1)))
    assert truncate_to_schur(KElement.basis(diag((1, 1))), 3).is_zero()


def test_truncation_is_algebra_map(rng):
    done = 0
    while done < 15:
        b = random_tilde_matrix(rng, 2, 2, 2)
        aoff = random_tilde_matrix(rng, 2, 2, 2)
        a = complete_to_row_sums(aoff.upper_part() + aoff.lower_part(), b.col_sums())
        r = a.entry_sum()
        lhs = truncate_to_schur(kmul(KElement.basis(b), KElement.basis(a)), r)
        rhs = mul(truncate_to_schur(KElement.basis(b), r), truncate_to_schur(KElement.basis(a), r))
        assert lhs == rhs, (b, a)
        done += 1


def test_transpose_compatibility():
    b, a = E(2, 1, 2), E(2, 2, 1)
    lhs = kmul(KElement.basis(a.transpose()), KElement.basis(b.transpose()))
    rhs = kmul(KElement.basis(b), KElement.basis(a)).transpose()
    assert lhs == rhs


def test_stabilization_report_canonical_pair():
    rep = stabilization_report(E(2, 1, 2), E(2, 2, 1), 1, 5)
    assert rep["matched"] and not rep["fit_failures"]
    sym = {row["matrix"]: row["symbolic"] for row in rep["keys"]}
    assert sym[E(2, 1, 1)] == XP1
    assert sym[E(2, 1, 2) + E(2, 2, 1) + diag((0, -1))] == IP_ONE


def test_stabilization_report_trivial_pairs():
    rep = stabilization_report(PeriodicMatrix.zero(2), PeriodicMatrix.zero(2), 1, 4)
    assert rep["matched"]
    assert [row["matrix"] for row in rep["keys"]] == [PeriodicMatrix.zero(2)]
    assert rep["keys"][0]["symbolic"] == IP_ONE
    b = diag((1, -1))
    a = complete_to_row_sums(E(2, 2, 1) + E(2, 1, 0), b.col_sums())
    rep2 = stabilization_report(b, a)
    assert rep2["matched"]
    assert all(row["symbolic"] == row["interpolated"] for row in rep2["keys"])


def test_stabilization_report_window_too_small_flags_fit():
    # a window of two points cannot pin a degree-2 coefficient
    b = E(2, 1, 2, 2)
    a = complete_to_row_sums(E(2, 2, 1, 2), b.col_sums())
    rep = stabilization_report(b, a, 3, 4)
    assert any(row["symbolic"].degree() > 1 for row in rep["keys"])
    assert rep["fit_failures"] and not rep["matched"]
    # the same pair passes with a wide enough window
    assert stabilization_report(b, a)["matched"]


def test_stabilization_rejects_mismatched_pair():
    with pytest.raises(ValueError):
        stabilization_report(E(2, 1, 2), E(2, 1, 2))
