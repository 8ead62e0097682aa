import pytest

from affschur.periodic import PeriodicMatrix, theta_matrices, wt_sum
from affschur.schur import (
    SchurElement,
    TriangularityViolation,
    bracket,
    brace,
    chunk_decomposition,
    mul,
    mul_ss_lower,
    mul_ss_upper,
    radical_word,
    tau,
    triangular_basis,
)
from affschur.weyl import oracle_mul
from conftest import pairs_with_matching_sums

E = PeriodicMatrix.unit
diag = PeriodicMatrix.from_diag


def test_basis_conventions():
    x = SchurElement.basis(diag((2, 1)))
    assert x.terms == {diag((2, 1)): 1} and x.r == 3
    # negative diagonal denotes zero
    assert SchurElement.basis(E(2, 1, 2) + diag((-1, 1))).is_zero()
    with pytest.raises(ValueError):
        SchurElement.basis(E(2, 1, 2).scale(-1))
    with pytest.raises(ValueError):
        SchurElement.basis(diag((2, 1)), r=4)


def test_container_semantics():
    x = SchurElement.basis(diag((1, 1)))
    assert (x + x.scale(-1)).is_zero()
    y = SchurElement.basis(E(2, 1, 2) + E(2, 2, 1))
    assert (x + y) - y == x
    with pytest.raises(ValueError):
        x + SchurElement.basis(diag((1, 1, 1)))


def test_fundamental_upper_example():
    got = mul_ss_upper(E(2, 1, 2) + diag((2, 0)), SchurElement.basis(E(2, 1, 2) + diag((1, 1))))
    assert got == SchurElement(2, 3, {E(2, 1, 2, 2) + diag((1, 0)): 2})


def test_fundamental_lower_identity_example():
    got = mul_ss_lower(E(2, 2, 1) + diag((0, 1)), SchurElement.basis(diag((1, 1))))
    assert got == SchurElement.basis(E(2, 2, 1) + diag((0, 1)))


def test_fundamental_upper_oracle_example():
    got = mul_ss_upper(E(2, 1, 1) + E(2, 1, 2), SchurElement.basis(E(2, 1, 2) + E(2, 2, 1)))
    assert got == SchurElement.basis(E(2, 1, 1) + E(2, 1, 2))


def test_fundamental_formulas_match_oracle_exhaustively_small():
    mats = theta_matrices(2, 3, 2)
    for b, a in pairs_with_matching_sums(mats):
        direction = b.ss_direction()
        if direction is None:
            continue
        x = SchurElement.basis(a)
        got = mul_ss_upper(b, x) if direction in ("upper", "diag") else mul_ss_lower(b, x)
        assert got == oracle_mul(b, a), (b, a)


def test_fundamental_weight_bookkeeping():
    b = E(2, 1, 2) + diag((2, 0))
    a = E(2, 1, 2) + diag((1, 1))
    for key in mul_ss_upper(b, SchurElement.basis(a)).terms:
        assert key.row_sums() == b.row_sums()
        assert key.col_sums() == a.col_sums()


def test_mul_ss_rejects_wrong_shape():
    with pytest.raises(ValueError):
        mul_ss_upper(E(2, 2, 1), SchurElement.basis(diag((1, 0))))
    with pytest.raises(ValueError):
        mul_ss_lower(E(2, 1, 2), SchurElement.basis(diag((0, 1))))
    with pytest.raises(ValueError):
        mul_ss_upper(E(2, 1, 3), SchurElement.basis(diag((1, 0))))


def test_radical_word():
    assert radical_word(E(2, 1, 2)) == [(1, 0)]
    assert radical_word(E(3, 1, 3)) == [(1, 0, 0), (0, 1, 0)]
    assert radical_word(E(2, 1, 4)) == [(1, 0), (0, 1), (1, 0)]
    assert radical_word(PeriodicMatrix.zero(2)) == []
    assert radical_word(E(2, 1, 3) + E(2, 2, 3)) == [(1, 1), (0, 1)]
    assert radical_word(E(2, 1, 3) + E(2, 2, 4)) == [(1, 1), (1, 1)]
    with pytest.raises(ValueError):
        radical_word(E(2, 2, 1))


def test_chunk_decomposition_diagonal():
    assert chunk_decomposition(diag((2, 1))) == (diag((2, 1)),)


def test_chunk_decomposition_mixed():
    got = chunk_decomposition(E(2, 1, 2) + E(2, 2, 1))
    assert got == (E(2, 1, 2) + diag((0, 1)), E(2, 2, 1) + diag((0, 1)))
    # each chunk is semisimple and the band sums are preserved
    for b in theta_matrices(2, 3, 2):
        for c in chunk_decomposition(b):
            assert c.ss_direction() is not None
            assert c.entry_sum() == b.entry_sum()


def test_chunk_decomposition_long_segment():
    chunks = chunk_decomposition(E(2, 1, 3) + diag((1, 1)))
    uppers = [c for c in chunks if c.ss_direction() == "upper" and not c.is_diagonal()]
    assert len(uppers) == 2


def test_mul_identity_idempotents():
    r = 2
    ident = SchurElement.zero(2, r)
    for mu in [(2, 0), (1, 1), (0, 2)]:
        ident = ident + SchurElement.basis(diag(mu))
    for m in theta_matrices(2, r, 2):
        x = SchurElement.basis(m)
        assert mul(ident, x) == x
        assert mul(x, ident) == x
    assert mul(SchurElement.basis(diag((2, 0))), SchurElement.basis(diag((2, 0)))) == SchurElement.basis(diag((2, 0)))


def test_mul_matches_oracle_on_hand_case():
    sq = SchurElement.basis(E(2, 1, 2) + E(2, 2, 1))
    assert mul(sq, sq) == SchurElement.basis(diag((1, 1)))


def test_mul_associativity_sampled(rng):
    mats = theta_matrices(2, 3, 2)
    by_co = {}
    for m in mats:
        by_co.setdefault(m.col_sums(), []).append(m)
    done = 0
    while done < 60:
        a = rng.choice(mats)
        bs = by_co.get(a.row_sums())
        if not bs:
            continue
        b = rng.choice(bs)
        cs = by_co.get(b.row_sums())
        if not cs:
            continue
        c = rng.choice(cs)
        xa, xb, xc = map(SchurElement.basis, (a, b, c))
        assert mul(mul(xc, xb), xa) == mul(xc, mul(xb, xa))
        done += 1


def test_tau_involution_and_transport(rng):
    mats = theta_matrices(2, 3, 2)
    for b, a in list(pairs_with_matching_sums(mats))[::17]:
        xb, xa = SchurElement.basis(b), SchurElement.basis(a)
        assert tau(tau(xb)) == xb
        assert tau(mul(xb, xa)) == mul(tau(xa), tau(xb))
    assert tau(SchurElement.basis(diag((1, 2)))) == SchurElement.basis(diag((1, 2)))


def test_brace():
    n = 2
    ident = brace(PeriodicMatrix.zero(n), (0, 0), 2)
    assert ident.terms == {diag((2, 0)): 1, diag((1, 1)): 1, diag((0, 2)): 1}
    assert brace(PeriodicMatrix.zero(n), (1, 1), 2) == SchurElement.basis(diag((1, 1)))
    assert brace(PeriodicMatrix.zero(n), (3, 0), 2).is_zero()
    got = brace(E(2, 1, 2), (0, 0), 2)
    assert got.terms == {E(2, 1, 2) + diag((1, 0)): 1, E(2, 1, 2) + diag((0, 1)): 1}
    with pytest.raises(ValueError):
        brace(diag((1, 0)), (0, 0), 2)


def test_bracket():
    got = bracket(PeriodicMatrix.zero(2), (1, 0), 2)
    assert got == SchurElement(2, 2, {diag((2, 0)): 2, diag((1, 1)): 1})
    assert bracket(E(2, 1, 2), (0, 0), 1) == SchurElement.basis(E(2, 1, 2))


def test_brace_commutation_through_diagonal():
    # X(0,r) [diag(lam)] = [diag(lam - co(X) + ro(X))] X(0,r) on brace images
    n, r = 2, 3
    for x in [E(2, 1, 2), E(2, 2, 1), E(2, 1, 2) + E(2, 2, 1)]:
        xe = brace(x, (0, 0), r)
        for lam in [(2, 1), (1, 2), (3, 0)]:
            lhs = mul(xe, SchurElement.basis(diag(lam)))
            shifted = tuple(l - c + ro for l, c, ro in zip(lam, x.col_sums(), x.row_sums()))
            if any(v < 0 for v in shifted):
                continue
            rhs = mul(SchurElement.basis(diag(shifted)), xe)
            assert lhs == rhs, (x, lam)


def test_triangular_basis_example():
    got = triangular_basis(E(2, 1, 2) + E(2, 2, 1), (0, 2), 2)
    assert got == SchurElement(2, 2, {E(2, 1, 2) + E(2, 2, 1): 1, diag((1, 1)): 1})
    assert triangular_basis(PeriodicMatrix.zero(2), (2, 1), 3) == SchurElement.basis(diag((2, 1)))


def test_triangular_basis_validation():
    with pytest.raises(ValueError):
        triangular_basis(E(2, 1, 2) + E(2, 2, 1), (1, 1), 2)  # weight below the hook sums
    with pytest.raises(ValueError):
        triangular_basis(E(2, 1, 2) + E(2, 2, 1), (0, 2), 3)  # size mismatch


def test_triangularity_violation_is_raisable():
    with pytest.raises(TriangularityViolation):
        raise TriangularityViolation("synthetic")
