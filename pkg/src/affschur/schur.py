"""The affine Schur algebra over Z at the group-algebra specialization.

Elements are finite integer combinations of standard basis symbols [A], where
A runs over the nonnegative n-periodic matrices with total band sum r.  The
product of a semisimple generator (all off-diagonal support on the first
super- or subdiagonal) against any basis element is given by a closed
transfer-matrix formula; general products reduce to these by a triangular
chunk recursion whose unitriangularity is asserted at runtime.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .intpoly import binom, weight_binom, weight_power
from .periodic import (
    PeriodicMatrix,
    Weight,
    compositions,
    corner_lt,
    entries_get,
    transfer_lower,
    transfer_upper,
    wt_add_sub,
    wt_is_nonneg,
    wt_leq,
    wt_sub,
    wt_sum,
    wt_zero,
)


class TriangularityViolation(RuntimeError):
    """A chunk product failed its leading-term contract.

    Raised when the product of the semisimple chunks of B is not
    [B] + strictly corner-lower terms with unit leading coefficient.
    """


class SchurElement:
    """Finite Z-linear combination of standard basis symbols [A]."""

    __slots__ = ("n", "r", "terms")

    def __init__(self, n: int, r: int, terms: Mapping[PeriodicMatrix, int] | Iterable[tuple[PeriodicMatrix, int]] = ()):
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict[PeriodicMatrix, int] = {}
        for m, c in items:
            if c:
                acc[m] = acc.get(m, 0) + c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "terms", {m: c for m, c in acc.items() if c})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("SchurElement is immutable")

    @classmethod
    def zero(cls, n: int, r: int) -> "SchurElement":
        return cls(n, r)

    @classmethod
    def basis(cls, a: PeriodicMatrix, r: int | None = None) -> "SchurElement":
        """[a]; matrices with a negative diagonal entry denote zero."""
        if not all(v >= 0 for i, j, v in a.entries if i != j):
            raise ValueError(f"off-diagonal entries must be nonnegative: {a!r}")
        s = a.entry_sum()
        if r is not None and s != r:
            raise ValueError(f"matrix has band sum {s}, expected {r}")
        r = s if r is None else r
        if any(v < 0 for i, j, v in a.entries if i == j):
            return cls.zero(a.n, r)
        return cls(a.n, r, {a: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[PeriodicMatrix, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0].entries)

    def _check_compatible(self, other: "SchurElement") -> None:
        if self.n != other.n or self.r != other.r:
            raise ValueError(f"algebra mismatch: S({self.n},{self.r}) vs S({other.n},{other.r})")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check_compatible(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return SchurElement(self.n, self.r, acc)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + other.scale(-1)

    def scale(self, c: int) -> "SchurElement":
        return SchurElement(self.n, self.r, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        return mul(self, other)

    def transpose(self) -> "SchurElement":
        """The algebra anti-involution [A] -> [transpose(A)]."""
        return SchurElement(self.n, self.r, {m.transpose(): c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurElement)
            and self.n == other.n
            and self.r == other.r
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, tuple(sorted((m.entries, c) for m, c in self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"SchurElement({self.n}, {self.r}, 0)"
        body = " + ".join(f"{c}*[{m!r}]" for m, c in self.sorted_terms())
        return f"SchurElement({self.n}, {self.r}, {body})"


# ---------------------------------------------------------------------------
# semisimple products (closed formulas)


def _shift_entry(n: int, i: int, j: int) -> tuple[int, int]:
    """Canonical position of the row-shift image of entry (i, j)."""
    return (i + 1, j) if i < n else (1, j - n)


@lru_cache(maxsize=1 << 18)
def _ss_basis_mul(b: PeriodicMatrix, a: PeriodicMatrix) -> tuple[tuple[PeriodicMatrix, int], ...]:
    """[b][a] for semisimple b, as (matrix, coefficient) pairs.

    Raising direction:  sum over transfer matrices T with row sums alpha of
        prod C(a[i,j] - T~[i,j] + T[i,j], T[i,j])  on  [a + T - T~];
    lowering direction mirrors with the shifted matrix in the lower index.
    """
    if b.col_sums() != a.row_sums():
        return ()
    n = a.n
    amap = a.entry_map()
    direction = b.ss_direction()
    out: list[tuple[PeriodicMatrix, int]] = []
    if direction in ("upper", "diag"):
        alpha = b.superdiag_weight()
        for tent in transfer_upper(a, alpha, cap_diag=True):
            tmap = {(i, j): v for i, j, v in tent}
            coeff = 1
            acc = dict(amap)
            for i, j, tv in tent:
                coeff *= binom(a.get(i, j) - entries_get(tmap, n, i - 1, j) + tv, tv)
                acc[(i, j)] = acc.get((i, j), 0) + tv
                pos = _shift_entry(n, i, j)
                acc[pos] = acc.get(pos, 0) - tv
            out.append((PeriodicMatrix._from_canonical(n, acc), coeff))
    elif direction == "lower":
        alpha = b.subdiag_weight()
        for tent in transfer_lower(a, alpha, cap_diag=True):
            tmap = {(i, j): v for i, j, v in tent}
            coeff = 1
            acc = dict(amap)
            for i, j, tv in tent:
                pos = _shift_entry(n, i, j)
                coeff *= binom(entries_get(amap, n, *pos) + tv - entries_get(tmap, n, *pos), tv)
                acc[(i, j)] = acc.get((i, j), 0) - tv
                acc[pos] = acc.get(pos, 0) + tv
            out.append((PeriodicMatrix._from_canonical(n, acc), coeff))
    else:
        raise ValueError(f"not a semisimple matrix: {b!r}")
    return tuple(out)


def _ss_apply(b: PeriodicMatrix, x: SchurElement) -> SchurElement:
    acc: dict[PeriodicMatrix, int] = {}
    for a, ca in x.terms.items():
        for key, coeff in _ss_basis_mul(b, a):
            acc[key] = acc.get(key, 0) + ca * coeff
    return SchurElement(x.n, x.r, acc)


def mul_ss_upper(b: PeriodicMatrix, x: SchurElement) -> SchurElement:
    """Left multiplication by a semisimple [b] supported on the superdiagonal."""
    if b.ss_direction() not in ("upper", "diag"):
        raise ValueError(f"expected superdiagonal semisimple matrix: {b!r}")
    return _ss_apply(b, x)


def mul_ss_lower(b: PeriodicMatrix, x: SchurElement) -> SchurElement:
    if b.ss_direction() not in ("lower", "diag"):
        raise ValueError(f"expected subdiagonal semisimple matrix: {b!r}")
    return _ss_apply(b, x)


# ---------------------------------------------------------------------------
# radical words and chunk decomposition


def radical_word(aplus: PeriodicMatrix) -> list[Weight]:
    """Layer weights of the radical filtration of the nilpotent representation
    attached to a strictly upper matrix: letter k has coordinate c equal to
    sum of a[i,j] over entries with j - i > k and i + k = c mod n."""
    if not aplus.in_theta_plus():
        raise ValueError(f"expected a strictly upper matrix: {aplus!r}")
    n = aplus.n
    depth = max((j - i for i, j, _ in aplus.entries), default=0)
    word = []
    for k in range(depth):
        layer = [0] * n
        for i, j, v in aplus.entries:
            if j - i > k:
                layer[(i + k - 1) % n] += v
        word.append(tuple(layer))
    return word


def _upper_chunk(n: int, alpha: Weight) -> PeriodicMatrix:
    return PeriodicMatrix(n, [(i, i + 1, alpha[i - 1]) for i in range(1, n + 1)])


def _lower_chunk(n: int, alpha: Weight) -> PeriodicMatrix:
    return PeriodicMatrix(n, [(i + 1, i, alpha[i - 1]) for i in range(1, n + 1)])


@lru_cache(maxsize=None)
def chunk_decomposition(b: PeriodicMatrix) -> tuple[PeriodicMatrix, ...]:
    """Semisimple chunks whose ordered product is [b] + corner-lower terms.

    The upper chunks come from the radical word of the strictly upper part,
    the lower chunks from the reversed radical word of the transposed lower
    part; each is completed by the diagonal correction that balances row and
    column sums along the product, anchored at the hook-sum weight of b."""
    if not b.in_theta():
        raise ValueError(f"expected a nonnegative matrix: {b!r}")
    if b.is_diagonal():
        return (b,)
    n = b.n
    lam = b.hook_sums()
    uppers = [_upper_chunk(n, al) for al in radical_word(b.upper_part())]
    lowers = [_lower_chunk(n, al) for al in reversed(radical_word(b.lower_part().transpose()))]
    out: list[PeriodicMatrix] = []
    for i, a in enumerate(uppers):
        corr = wt_sub(lam, a.col_sums())
        for later in uppers[i + 1 :]:
            corr = wt_add_sub(corr, later.row_sums(), later.col_sums())
        out.append(a + PeriodicMatrix.from_diag(corr))
    for j, c in enumerate(lowers):
        corr = wt_sub(lam, c.row_sums())
        for earlier in lowers[:j]:
            corr = wt_add_sub(corr, earlier.col_sums(), earlier.row_sums())
        out.append(c + PeriodicMatrix.from_diag(corr))
    return tuple(out)


# ---------------------------------------------------------------------------
# general products by triangular recursion


@lru_cache(maxsize=None)
def _chunk_lower_terms(b: PeriodicMatrix) -> tuple[tuple[PeriodicMatrix, int], ...]:
    """Coefficients c with  prod(chunks of b) = [b] + sum c [b'], b' corner-lower.

    Every contract violation surfaces as TriangularityViolation."""
    chunks = chunk_decomposition(b)
    x = SchurElement.basis(chunks[-1])
    for c in reversed(chunks[:-1]):
        x = _ss_apply(c, x)
    lead = x.terms.get(b, 0)
    if lead != 1:
        raise TriangularityViolation(f"chunk product of {b!r} has leading coefficient {lead}")
    rows, cols, norm = b.row_sums(), b.col_sums(), b.band_norm()
    lower = []
    for key, coeff in x.sorted_terms():
        if key == b:
            continue
        if key.row_sums() != rows or key.col_sums() != cols:
            raise TriangularityViolation(f"chunk product of {b!r} leaks the (ro, co) fiber at {key!r}")
        if key.band_norm() >= norm or not corner_lt(key, b):
            raise TriangularityViolation(f"chunk product of {b!r} has non-lower term {key!r}")
        lower.append((key, coeff))
    return tuple(lower)


_BASIS_MUL_CACHE: dict[tuple[PeriodicMatrix, PeriodicMatrix], SchurElement] = {}
_BASIS_MUL_CACHE_CAP = 1 << 19


def _basis_mul(b: PeriodicMatrix, a: PeriodicMatrix) -> SchurElement:
    """[b][a] in the Schur algebra of size entry_sum(b) = entry_sum(a)."""
    n, r = b.n, b.entry_sum()
    if b.col_sums() != a.row_sums():
        return SchurElement.zero(n, r)
    if b.ss_direction() is not None:
        return SchurElement(n, r, _ss_basis_mul(b, a))
    key = (b, a)
    hit = _BASIS_MUL_CACHE.get(key)
    if hit is not None:
        return hit
    x = SchurElement.basis(a)
    for c in reversed(chunk_decomposition(b)):
        x = _ss_apply(c, x)
    acc = dict(x.terms)
    for b2, coeff in _chunk_lower_terms(b):
        for m, c2 in _basis_mul(b2, a).terms.items():
            acc[m] = acc.get(m, 0) - coeff * c2
    x = SchurElement(n, r, acc)
    if len(_BASIS_MUL_CACHE) >= _BASIS_MUL_CACHE_CAP:
        _BASIS_MUL_CACHE.clear()
    _BASIS_MUL_CACHE[key] = x
    return x


def mul(x: SchurElement, y: SchurElement) -> SchurElement:
    x._check_compatible(y)
    acc: dict[PeriodicMatrix, int] = {}
    for b, cb in x.terms.items():
        for a, ca in y.terms.items():
            c = cb * ca
            for m, v in _basis_mul(b, a).terms.items():
                acc[m] = acc.get(m, 0) + c * v
    return SchurElement(x.n, x.r, acc)


def tau(x: SchurElement) -> SchurElement:
    """Transpose anti-involution."""
    return x.transpose()


# ---------------------------------------------------------------------------
# distinguished elements


def brace(a: PeriodicMatrix, lam: Weight, r: int) -> SchurElement:
    """sum over nonneg weights mu of size r - entry_sum(a) of
    C(mu, lam) [a + diag(mu)]; zero on negative off-diagonal data."""
    n = a.n
    if any(i == j for i, j, _ in a.entries):
        raise ValueError(f"expected a zero-diagonal matrix: {a!r}")
    if not wt_is_nonneg(lam):
        raise ValueError(f"expected a nonnegative weight: {lam}")
    if not a.in_theta_pm():
        return SchurElement.zero(n, r)
    rest = r - a.entry_sum() - wt_sum(lam)
    if rest < 0:
        return SchurElement.zero(n, r)
    terms = []
    for extra in compositions(rest, n):
        mu = tuple(l + e for l, e in zip(lam, extra))
        terms.append((a + PeriodicMatrix.from_diag(mu), weight_binom(mu, lam)))
    return SchurElement(n, r, terms)


def bracket(a: PeriodicMatrix, jj: Weight, r: int) -> SchurElement:
    """sum over nonneg weights lam of size r - entry_sum(a) of
    lam^jj [a + diag(lam)]."""
    n = a.n
    if any(i == j for i, j, _ in a.entries):
        raise ValueError(f"expected a zero-diagonal matrix: {a!r}")
    if not a.in_theta_pm():
        return SchurElement.zero(n, r)
    rest = r - a.entry_sum()
    if rest < 0:
        return SchurElement.zero(n, r)
    terms = []
    for lam in compositions(rest, n):
        c = weight_power(lam, jj)
        if c:
            terms.append((a + PeriodicMatrix.from_diag(lam), c))
    return SchurElement(n, r, terms)


def triangular_basis(a: PeriodicMatrix, lam: Weight, r: int) -> SchurElement:
    """The basis element  brace(a+, 0, r) [diag(lam)] brace(a-, 0, r); asserted
    to equal [a + diag(lam - hook_sums(a))] + strictly corner-lower terms."""
    n = a.n
    if not a.in_theta_pm():
        raise ValueError(f"expected a zero-diagonal nonnegative matrix: {a!r}")
    hooks = a.hook_sums()
    if not wt_leq(hooks, lam):
        raise ValueError(f"weight {lam} is not >= the hook sums {hooks} of {a!r}")
    if wt_sum(lam) != r:
        raise ValueError(f"weight size {wt_sum(lam)} != r = {r}")
    zero = wt_zero(n)
    x = mul(brace(a.upper_part(), zero, r), SchurElement.basis(PeriodicMatrix.from_diag(lam)))
    x = mul(x, brace(a.lower_part(), zero, r))
    lead = a + PeriodicMatrix.from_diag(wt_sub(lam, hooks))
    if x.terms.get(lead, 0) != 1:
        raise TriangularityViolation(f"triangular element of ({a!r}, {lam}) lacks unit leading term {lead!r}")
    for key in x.terms:
        if key != lead and not corner_lt(key, lead):
            raise TriangularityViolation(f"non-lower term {key!r} in triangular element of ({a!r}, {lam})")
    return x


def clear_caches() -> None:
    _ss_basis_mul.cache_clear()
    _chunk_lower_terms.cache_clear()
    chunk_decomposition.cache_clear()
    _BASIS_MUL_CACHE.clear()
