"""The extended affine symmetric group and the double-coset product oracle.

Group elements are bijections w of Z with w(i + r) = w(i) + r, stored by the
window (w(1), ..., w(r)).  Finite Young subgroups attached to compositions of
r act on the base window; double cosets of pairs of Young subgroups index the
standard basis of the Schur algebra through block-intersection matrices, and
the basis product is computed here directly from coset combinatorics.  This
route is independent of the closed multiplication formulas and certifies them
on small instances; it is capped at r <= ORACLE_MAX_R.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .periodic import PeriodicMatrix, Weight, wt_sum
from .schur import SchurElement

ORACLE_MAX_R = 6


class AffinePermutation:
    """Permutation of Z commuting with the shift by r, in window notation."""

    __slots__ = ("window", "_hash")

    def __init__(self, window: tuple[int, ...] | list[int]):
        window = tuple(window)
        r = len(window)
        if r == 0:
            raise ValueError("window must be nonempty")
        if sorted(w % r for w in window) != list(range(r)):
            raise ValueError(f"window residues must form a permutation: {window}")
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "_hash", hash(window))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("AffinePermutation is immutable")

    @property
    def r(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, r: int) -> "AffinePermutation":
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def simple(cls, r: int, i: int) -> "AffinePermutation":
        """The reflection swapping i and i+1 modulo r."""
        w = list(range(1, r + 1))
        a, b = (i - 1) % r, i % r
        w[a], w[b] = w[a] + 1, w[b] - 1
        return cls(tuple(w))

    @classmethod
    def rotation(cls, r: int, k: int = 1) -> "AffinePermutation":
        """j -> j + k for all j."""
        return cls(tuple(j + k for j in range(1, r + 1)))

    def __call__(self, i: int) -> int:
        r = len(self.window)
        s, i0 = divmod(i - 1, r)
        return self.window[i0] + s * r

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        """(self * other)(i) = self(other(i))."""
        if self.r != other.r:
            raise ValueError("window length mismatch")
        return AffinePermutation(tuple(self(j) for j in other.window))

    def inverse(self) -> "AffinePermutation":
        r = len(self.window)
        win = [0] * r
        for i, w in enumerate(self.window, start=1):
            s, w0 = divmod(w - 1, r)
            win[w0] = i - s * r
        return AffinePermutation(tuple(win))

    def is_translation_free(self) -> bool:
        """True when the window sums to 1 + ... + r (the non-extended subgroup)."""
        r = len(self.window)
        return sum(self.window) == r * (r + 1) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, AffinePermutation) and self.window == other.window

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"AffinePermutation({self.window})"


# ---------------------------------------------------------------------------
# Young subgroups and coset combinatorics


def weight_blocks(lam: Weight) -> list[range]:
    """Consecutive blocks of {1..r} cut by the composition lam."""
    blocks, start = [], 1
    for part in lam:
        blocks.append(range(start, start + part))
        start += part
    return blocks


@lru_cache(maxsize=None)
def _base_block_table(lam: Weight) -> tuple[int, ...]:
    """table[y-1] = 1-based index of the block of y, for y in 1..r."""
    table = []
    for idx, block in enumerate(weight_blocks(lam), start=1):
        table.extend([idx] * len(block))
    return tuple(table)


def affine_block(lam: Weight, y: int) -> int:
    """Block index of y in the periodic block decomposition of Z."""
    r = wt_sum(lam)
    s, y0 = divmod(y - 1, r)
    return _base_block_table(lam)[y0] + s * len(lam)


def is_min_rep(d: AffinePermutation, lam: Weight) -> bool:
    """Whether d is increasing on every block of lam (equivalently, whether
    the inverse of d is a minimal-length left-coset representative)."""
    for block in weight_blocks(lam):
        vals = [d.window[x - 1] for x in block]
        if any(vals[k] >= vals[k + 1] for k in range(len(vals) - 1)):
            return False
    return True


@lru_cache(maxsize=None)
def young_subgroup(lam: Weight) -> frozenset[AffinePermutation]:
    """All permutations fixing each block of lam setwise (a finite group)."""
    r = wt_sum(lam)
    blocks = [list(b) for b in weight_blocks(lam) if len(b) > 1]
    base = list(range(1, r + 1))
    members = []
    pools = [list(itertools.permutations(b)) for b in blocks]
    for choice in itertools.product(*pools):
        win = base[:]
        for block, perm in zip(blocks, choice):
            for slot, val in zip(block, perm):
                win[slot - 1] = val
        members.append(AffinePermutation(tuple(win)))
    return frozenset(members)


def double_coset(lam: Weight, d: AffinePermutation, mu: Weight) -> frozenset[AffinePermutation]:
    """The finite set {u d v : u in the lam-subgroup, v in the mu-subgroup}."""
    left, right = young_subgroup(lam), young_subgroup(mu)
    return frozenset(u * d * v for u in left for v in right)


class CosetTriple:
    """A double coset (lam, d, mu) with d the minimal-length representative."""

    __slots__ = ("lam", "d", "mu")

    def __init__(self, lam: Weight, d: AffinePermutation, mu: Weight):
        r = wt_sum(lam)
        if r != wt_sum(mu) or r != d.r:
            raise ValueError("sizes of lam, mu and the window must agree")
        if not is_min_rep(d, mu) or not is_min_rep(d.inverse(), lam):
            raise ValueError(f"{d!r} is not the minimal representative for ({lam}, {mu})")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("CosetTriple is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CosetTriple)
            and (self.lam, self.d, self.mu) == (other.lam, other.d, other.mu)
        )

    def __hash__(self) -> int:
        return hash((self.lam, self.d, self.mu))

    def __repr__(self) -> str:
        return f"CosetTriple({self.lam}, {self.d!r}, {self.mu})"


# ---------------------------------------------------------------------------
# the correspondence with periodic matrices


def coset_to_matrix(lam: Weight, d: AffinePermutation, mu: Weight, n: int | None = None) -> PeriodicMatrix:
    """Matrix of block-intersection cardinalities |R_k(lam) /\\ d R_l(mu)|."""
    n = len(lam) if n is None else n
    r = wt_sum(lam)
    entries: dict[tuple[int, int], int] = {}
    for x in range(1, r + 1):
        l = affine_block(mu, x)
        k = affine_block(lam, d(x))
        s, k0 = (k - 1) // n, (k - 1) % n + 1
        key = (k0, l - s * n)
        entries[key] = entries.get(key, 0) + 1
    return PeriodicMatrix(n, [(i, j, v) for (i, j), v in entries.items()])


def matrix_to_coset(a: PeriodicMatrix) -> CosetTriple:
    """Inverse of coset_to_matrix on nonnegative matrices: reconstructs the
    minimal double-coset representative by filling each column block in
    increasing order into the row blocks, consuming columns left to right."""
    if not a.in_theta():
        raise ValueError(f"expected a nonnegative matrix: {a!r}")
    n = a.n
    r = a.entry_sum()
    if r == 0:
        raise ValueError("the zero matrix does not index a coset")
    lam, mu = a.row_sums(), a.col_sums()
    lam_blocks = [list(b) for b in weight_blocks(lam)]
    # column j0 of the full matrix: affine rows i with their entries, increasing
    window = [0] * r
    mu_blocks = [list(b) for b in weight_blocks(mu)]
    for j0 in range(1, n + 1):
        elements = mu_blocks[j0 - 1]
        if not elements:
            continue
        col_entries = []  # (affine row i, value)
        for (r0, c0, v) in a.entries:
            if (j0 - c0) % n == 0:
                s = (j0 - c0) // n
                col_entries.append((r0 + s * n, v))
        col_entries.sort()
        pos = 0
        for i, v in col_entries:
            s, i0 = divmod(i - 1, n)
            i0 += 1
            # slots of block i already consumed by columns j < j0 in row i
            offset = 0
            for (rr, cc, vv) in a.entries:
                if (i - rr) % n == 0 and cc + (i - rr) < j0:
                    offset += vv
            block = lam_blocks[i0 - 1]
            for t in range(v):
                x = elements[pos]
                window[x - 1] = block[offset + t] + s * r
                pos += 1
    d = AffinePermutation(tuple(window))
    triple = CosetTriple(lam, d, mu)
    if coset_to_matrix(lam, d, mu, n) != a:
        raise AssertionError(f"coset reconstruction failed for {a!r}")
    return triple


# ---------------------------------------------------------------------------
# the convolution oracle


@lru_cache(maxsize=1 << 16)
def _left_coset_data(b: PeriodicMatrix) -> tuple[Weight, Weight, tuple[AffinePermutation, ...]]:
    """(lam, mu, representatives of the left lam-subgroup cosets inside the
    double coset of b).  Every such coset meets {d v : v in the mu-subgroup},
    so only the right factor is enumerated; the least window found per coset
    is kept for determinism."""
    triple = matrix_to_coset(b)
    lam, d, mu = triple.lam, triple.d, triple.mu
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for v in young_subgroup(mu):
        w = (d * v).window
        key = tuple(affine_block(lam, y) for y in w)
        if key not in seen or w < seen[key]:
            seen[key] = w
    reps = tuple(AffinePermutation(w) for w in sorted(seen.values()))
    return lam, mu, reps


@lru_cache(maxsize=1 << 16)
def _right_coset_reps(a: PeriodicMatrix) -> tuple[Weight, Weight, tuple[AffinePermutation, ...]]:
    """(mu, nu, representatives of the left mu-subgroup cosets in the double
    coset of a, i.e. the factors c with the coset equal to a disjoint union
    of mu-subgroup translates times c)."""
    triple = matrix_to_coset(a)
    mu, d, nu = triple.lam, triple.d, triple.mu
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for v in young_subgroup(nu):
        w = (d * v).window
        key = tuple(affine_block(mu, y) for y in w)
        if key not in seen or w < seen[key]:
            seen[key] = w
    reps = tuple(AffinePermutation(w) for w in sorted(seen.values()))
    return mu, nu, reps


@lru_cache(maxsize=1 << 16)
def _block_tables(b: PeriodicMatrix, lo: int, hi: int) -> tuple[tuple[int, ...], ...]:
    """For each left representative u of b, the table of lam-block indices of
    u(y) for y in lo..hi."""
    lam, _, reps = _left_coset_data(b)
    n, r = b.n, b.entry_sum()
    lam_base = _base_block_table(lam)
    tables = []
    for u in reps:
        tbl = []
        for y in range(lo, hi + 1):
            s, y0 = divmod(y - 1, r)
            z = u.window[y0] + s * r
            zs, z0 = divmod(z - 1, r)
            tbl.append(lam_base[z0] + zs * n)
        tables.append(tuple(tbl))
    return tuple(tables)


def oracle_mul(b: PeriodicMatrix, a: PeriodicMatrix) -> SchurElement:
    """[b][a] computed from double-coset combinatorics alone.

    The right factor's double coset is cut into right mu-cosets; the left
    factor's into left lam-cosets.  Pairwise products are tallied by the left
    lam-coset they land in, yielding the multiplicity of each target double
    coset.  The tallies are asserted to be constant across each target and to
    cover it entirely."""
    if b.n != a.n:
        raise ValueError("period mismatch")
    n, r = b.n, a.entry_sum()
    if b.entry_sum() != r:
        raise ValueError(f"band sums differ: {b.entry_sum()} vs {r}")
    if r > ORACLE_MAX_R:
        raise ValueError(f"oracle is capped at r <= {ORACLE_MAX_R}, got {r}")
    if b.col_sums() != a.row_sums():
        return SchurElement.zero(n, r)
    lam, mu, left_reps = _left_coset_data(b)
    mu2, nu, right_reps = _right_coset_reps(a)
    assert mu == mu2
    nu_base = _base_block_table(nu)

    # per left representative u, the lookup y -> block of lam containing u(y),
    # over the range of values taken by the right representatives' windows
    lo = min(y for c in right_reps for y in c.window)
    hi = max(y for c in right_reps for y in c.window)
    tables = _block_tables(b, lo, hi)

    tally: dict[tuple[int, ...], int] = {}
    for c in right_reps:
        offs = [y - lo for y in c.window]
        for tbl in tables:
            key = tuple(tbl[o] for o in offs)
            tally[key] = tally.get(key, 0) + 1

    by_matrix: dict[PeriodicMatrix, list[int]] = {}
    for key, count in tally.items():
        entries: dict[tuple[int, int], int] = {}
        for x in range(1, r + 1):
            k = key[x - 1]
            s, k0 = (k - 1) // n, (k - 1) % n + 1
            pos = (k0, nu_base[x - 1] - s * n)
            entries[pos] = entries.get(pos, 0) + 1
        mat = PeriodicMatrix._from_canonical(n, entries)
        by_matrix.setdefault(mat, []).append(count)

    size_nu = 1
    for part in nu:
        for t in range(2, part + 1):
            size_nu *= t
    terms = {}
    for mat, counts in by_matrix.items():
        if len(set(counts)) != 1:
            raise AssertionError(f"inconsistent multiplicities {counts} on target {mat!r}")
        expected = size_nu
        for _, _, v in mat.entries:
            for t in range(2, v + 1):
                expected //= t
        if len(counts) != expected:
            raise AssertionError(
                f"target {mat!r} covered by {len(counts)} left cosets, expected {expected}"
            )
        terms[mat] = counts[0]
    return SchurElement(n, r, terms)
