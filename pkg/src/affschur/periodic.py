"""n-periodic integer matrices with finite band support, and weight vectors.

A periodic matrix is a Z x Z integer matrix A = (a[i,j]) satisfying
a[i+n, j+n] = a[i, j] with finitely many nonzero entries in every row and
column.  It is stored canonically on the fundamental band: rows 1..n, columns
ranging over Z.  All the index sets used elsewhere in the package are carved
out of this single type by sign and support conditions:

* nonneg off-diagonal, arbitrary diagonal  (``in_theta_tilde``)
* all entries nonneg                       (``in_theta``)
* nonneg with zero diagonal                (``in_theta_pm``)
* strictly upper / strictly lower          (``in_theta_plus`` / ``in_theta_minus``)

Weights (periodic integer vectors) are plain length-n tuples throughout.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

Weight = tuple[int, ...]


# ---------------------------------------------------------------------------
# weight helpers


def wt_zero(n: int) -> Weight:
    return (0,) * n


def wt_unit(n: int, i: int) -> Weight:
    """Standard basis weight with a single 1 in (1-based) position i mod n."""
    return tuple(1 if k == (i - 1) % n else 0 for k in range(n))


def wt_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def wt_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def wt_leq(a: Weight, b: Weight) -> bool:
    """Coordinatewise partial order."""
    return all(x <= y for x, y in zip(a, b, strict=True))


def wt_sum(a: Weight) -> int:
    return sum(a)


def wt_is_nonneg(a: Weight) -> bool:
    return all(x >= 0 for x in a)


def wt_add_sub(base: Weight, plus: Weight, minus: Weight) -> Weight:
    return tuple(b + p - m for b, p, m in zip(base, plus, minus, strict=True))


def compositions(total: int, parts: int) -> Iterator[Weight]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def weights_below(bound: Weight) -> Iterator[Weight]:
    """All nonnegative weights <= bound coordinatewise."""
    if not wt_is_nonneg(bound):
        return
    if len(bound) == 0:
        yield ()
        return
    for first in range(bound[0] + 1):
        for rest in weights_below(bound[1:]):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# periodic matrices


class PeriodicMatrix:
    """Immutable n-periodic integer matrix with finite band support.

    Entries are canonicalized to rows 1..n; entry (i, j) with i outside that
    range denotes the stored entry (i - sn, j - sn).  Two matrices are equal
    iff their canonical entry maps are equal.
    """

    __slots__ = ("n", "entries", "_map", "_hash")

    def __init__(self, n: int, data: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]] = ()):
        if n < 1:
            raise ValueError(f"period must be positive, got {n}")
        acc: dict[tuple[int, int], int] = {}
        items = data.items() if hasattr(data, "items") else (((x[0], x[1]), x[2]) for x in data)
        for (i, j), v in items:
            if v == 0:
                continue
            s = (i - 1) // n
            key = (i - s * n, j - s * n)
            acc[key] = acc.get(key, 0) + v
        object.__setattr__(self, "n", n)
        ent = tuple(sorted((i, j, v) for (i, j), v in acc.items() if v != 0))
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "_map", {(i, j): v for i, j, v in ent})
        object.__setattr__(self, "_hash", hash((n, ent)))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("PeriodicMatrix is immutable")

    # -- construction helpers

    @classmethod
    def _from_canonical(cls, n: int, mapping: Mapping[tuple[int, int], int]) -> "PeriodicMatrix":
        """Fast path: keys already have rows in 1..n; zero values are dropped."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        ent = tuple(sorted((i, j, v) for (i, j), v in mapping.items() if v))
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "_map", {(i, j): v for i, j, v in ent})
        object.__setattr__(self, "_hash", hash((n, ent)))
        return self

    @classmethod
    def zero(cls, n: int) -> "PeriodicMatrix":
        return cls(n)

    @classmethod
    def unit(cls, n: int, i: int, j: int, v: int = 1) -> "PeriodicMatrix":
        """v * E[i,j] (the periodic matrix unit)."""
        return cls(n, [(i, j, v)])

    @classmethod
    def from_diag(cls, weight: Sequence[int]) -> "PeriodicMatrix":
        n = len(weight)
        return cls._from_canonical(n, {(i + 1, i + 1): w for i, w in enumerate(weight)})

    @classmethod
    def identity(cls, n: int) -> "PeriodicMatrix":
        return cls.from_diag((1,) * n)

    # -- entry access

    def get(self, i: int, j: int) -> int:
        """Entry of the full periodic matrix at (i, j), any i, j in Z."""
        n = self.n
        s = (i - 1) // n
        return self._map.get((i - s * n, j - s * n), 0)

    def entry_map(self) -> dict[tuple[int, int], int]:
        """The canonical (row, col) -> value map.  Treat as read-only."""
        return self._map

    def is_zero(self) -> bool:
        return not self.entries

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j, _ in self.entries)

    def band_limits(self) -> tuple[int, int]:
        """(min, max) of j - i over the support; (0, 0) for zero or diagonal."""
        offs = [j - i for i, j, _ in self.entries]
        return (min(offs, default=0), max(offs, default=0))

    def bandwidth(self) -> int:
        return max((abs(j - i) for i, j, _ in self.entries), default=0)

    # -- arithmetic

    def __add__(self, other: "PeriodicMatrix") -> "PeriodicMatrix":
        if self.n != other.n:
            raise ValueError("period mismatch")
        acc = dict(self._map)
        for ij, v in other._map.items():
            acc[ij] = acc.get(ij, 0) + v
        return PeriodicMatrix._from_canonical(self.n, acc)

    def __sub__(self, other: "PeriodicMatrix") -> "PeriodicMatrix":
        if self.n != other.n:
            raise ValueError("period mismatch")
        acc = dict(self._map)
        for ij, v in other._map.items():
            acc[ij] = acc.get(ij, 0) - v
        return PeriodicMatrix._from_canonical(self.n, acc)

    def scale(self, k: int) -> "PeriodicMatrix":
        return PeriodicMatrix._from_canonical(self.n, {ij: k * v for ij, v in self._map.items()})

    def shift_diag(self, a: int) -> "PeriodicMatrix":
        """A + a*I."""
        if a == 0:
            return self
        acc = dict(self._map)
        for i in range(1, self.n + 1):
            acc[(i, i)] = acc.get((i, i), 0) + a
        return PeriodicMatrix._from_canonical(self.n, acc)

    def transpose(self) -> "PeriodicMatrix":
        return PeriodicMatrix(self.n, [(j, i, v) for i, j, v in self.entries])

    def row_shift(self) -> "PeriodicMatrix":
        """The matrix T~ with (T~)[i,j] = T[i-1,j]; column sums are preserved."""
        n = self.n
        return PeriodicMatrix._from_canonical(
            n, {((i + 1, j) if i < n else (1, j - n)): v for i, j, v in self.entries}
        )

    # -- sums and weights

    def row_sums(self) -> Weight:
        acc = [0] * self.n
        for i, _, v in self.entries:
            acc[i - 1] += v
        return tuple(acc)

    def col_sums(self) -> Weight:
        acc = [0] * self.n
        for _, j, v in self.entries:
            acc[(j - 1) % self.n] += v
        return tuple(acc)

    def entry_sum(self) -> int:
        """Total of one fundamental band; the size r of the index set the matrix lives in."""
        return sum(v for _, _, v in self.entries)

    def hook_sums(self) -> Weight:
        """The weight (sigma_1, ..., sigma_n) with
        sigma_i = a[i,i] + sum_{j<i} (a[i,j] + a[j,i]), summed over the full
        periodic extension.  Its total equals entry_sum()."""
        n = self.n
        acc = [0] * n
        for i in range(1, n + 1):
            acc[i - 1] += self.get(i, i)
        for r, c, v in self.entries:
            # copies (r+sn, c+sn); row part: r+sn == i needs s == (i-r)/n
            for i in range(1, n + 1):
                if (i - r) % n == 0:
                    j = c + (i - r)
                    if j < i:
                        acc[i - 1] += v
                # column part: c+sn == i
                if (i - c) % n == 0:
                    row = r + (i - c)
                    if row < i:
                        acc[i - 1] += v
        return tuple(acc)

    def diag_weight(self) -> Weight:
        return tuple(self.get(i, i) for i in range(1, self.n + 1))

    # -- triangular split

    def upper_part(self) -> "PeriodicMatrix":
        return PeriodicMatrix(self.n, [(i, j, v) for i, j, v in self.entries if j > i])

    def lower_part(self) -> "PeriodicMatrix":
        return PeriodicMatrix(self.n, [(i, j, v) for i, j, v in self.entries if j < i])

    def diag_part(self) -> "PeriodicMatrix":
        return PeriodicMatrix(self.n, [(i, j, v) for i, j, v in self.entries if j == i])

    def split(self) -> tuple["PeriodicMatrix", "PeriodicMatrix", "PeriodicMatrix"]:
        """(strictly upper, diagonal, strictly lower)."""
        return self.upper_part(), self.diag_part(), self.lower_part()

    # -- classifiers

    def is_diagonal(self) -> bool:
        return all(i == j for i, j, _ in self.entries)

    def in_theta_tilde(self) -> bool:
        """Off-diagonal entries nonnegative; diagonal unrestricted."""
        return all(v >= 0 for i, j, v in self.entries if i != j)

    def in_theta(self) -> bool:
        return all(v >= 0 for _, _, v in self.entries)

    def in_theta_plus(self) -> bool:
        return all(j > i and v >= 0 for i, j, v in self.entries)

    def in_theta_minus(self) -> bool:
        return all(j < i and v >= 0 for i, j, v in self.entries)

    def in_theta_pm(self) -> bool:
        """Nonnegative entries and zero diagonal."""
        return all(i != j and v >= 0 for i, j, v in self.entries)

    def ss_direction(self) -> str | None:
        """'upper'/'lower'/'diag' when the off-diagonal support is confined to
        the first superdiagonal (i, i+1), resp. subdiagonal (i, i-1), with
        nonnegative values there; None otherwise."""
        up = low = False
        for i, j, v in self.entries:
            if i == j:
                continue
            if j == i + 1 and v >= 0:
                up = True
            elif j == i - 1 and v >= 0:
                low = True
            else:
                return None
        if up and low:
            return None
        if up:
            return "upper"
        if low:
            return "lower"
        return "diag"

    def superdiag_weight(self) -> Weight:
        """alpha with A = sum alpha_i E[i,i+1] + diagonal (caller checks shape)."""
        return tuple(self.get(i, i + 1) for i in range(1, self.n + 1))

    def subdiag_weight(self) -> Weight:
        """alpha with A = sum alpha_i E[i+1,i] + diagonal (caller checks shape)."""
        return tuple(self.get(i + 1, i) for i in range(1, self.n + 1))

    # -- norms and orders

    def band_norm(self) -> int:
        """sum over off-diagonal entries of |j-i| (|j-i|+1) / 2 * a[i,j].

        Zero exactly on diagonal matrices (within the nonneg off-diagonal
        world); strictly decreases along the corner order."""
        total = 0
        for i, j, v in self.entries:
            d = abs(j - i)
            total += d * (d + 1) // 2 * v
        return total

    def corner_sum(self, i: int, j: int) -> int:
        """sigma[i,j]: for i < j the sum of entries in rows <= i and columns >= j;
        for i > j the sum over rows >= i and columns <= j.  Finite by the band
        support condition."""
        if i == j:
            raise ValueError("corner sums are defined off the diagonal only")
        n = self.n
        total = 0
        for r, c, v in self.entries:
            if i < j:
                # copies (r+sn, c+sn) with r+sn <= i and c+sn >= j
                hi = (i - r) // n
                lo = -((c - j) // n)
            else:
                # copies with r+sn >= i and c+sn <= j
                lo = -((r - i) // n)
                hi = (j - c) // n
            count = hi - lo + 1
            if count > 0:
                total += count * v
        return total

    # -- misc dunder

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodicMatrix) and self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}):{v}" for i, j, v in self.entries)
        return f"PeriodicMatrix({self.n}, {{{body}}})"


def theta_matrices(n: int, r: int, band: int) -> list[PeriodicMatrix]:
    """All nonnegative n-periodic matrices of band sum r with support inside
    the band window |j - i| <= band, in a fixed deterministic order."""
    positions = [(i, j) for i in range(1, n + 1) for j in range(i - band, i + band + 1)]
    out: list[PeriodicMatrix] = []

    def rec(idx: int, rem: int, acc: list[tuple[int, int, int]]) -> None:
        if idx == len(positions):
            if rem == 0:
                out.append(PeriodicMatrix(n, acc))
            return
        i, j = positions[idx]
        for v in range(rem + 1):
            rec(idx + 1, rem - v, acc + [(i, j, v)] if v else acc)

    rec(0, r, [])
    return out


def corner_leq(b: PeriodicMatrix, a: PeriodicMatrix) -> bool:
    """b <= a in the corner-sum order: sigma[i,j](b) <= sigma[i,j](a) at every
    off-diagonal position.  Checked for i in 1..n and j over the union of both
    bands widened by one column; outside that window both sides vanish."""
    if b.n != a.n:
        raise ValueError("period mismatch")
    if not (b.in_theta_tilde() and a.in_theta_tilde()):
        raise ValueError("corner order is defined on matrices with nonneg off-diagonal")
    n = a.n
    cols = [j for _, j, _ in a.entries] + [j for _, j, _ in b.entries]
    if not cols:
        return True
    lo, hi = min(cols) - 1, max(cols) + 1
    for i in range(1, n + 1):
        for j in range(lo, hi + 1):
            if j == i:
                continue
            if b.corner_sum(i, j) > a.corner_sum(i, j):
                return False
    return True


def corner_lt(b: PeriodicMatrix, a: PeriodicMatrix) -> bool:
    return b != a and corner_leq(b, a)


# ---------------------------------------------------------------------------
# transfer-matrix enumeration for the closed multiplication formulas
#
# A "transfer matrix" T for a step against A is a nonnegative periodic matrix
# with prescribed row sums alpha whose entries are capped so that the
# binomial coefficients of the closed product formulas are nonzero.  The
# uncappable position in row i is the one that lands on the diagonal after
# the row shift; with cap_diag=True it is capped by the diagonal of A too.
# Results are yielded as canonical entry tuples ((i, j, v), ...) with i in
# 1..n, zero values omitted.

TransferEntries = tuple[tuple[int, int, int], ...]


def _row_choices(positions: list[tuple[int, int | None]], total: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Distribute `total` over (col, cap) slots; cap None means unbounded."""
    if total == 0:
        yield ()
        return
    if not positions:
        return
    (col, cap), rest = positions[0], positions[1:]
    top = total if cap is None else min(cap, total)
    for t in range(top + 1):
        for tail in _row_choices(rest, total - t):
            if t:
                yield ((col, t),) + tail
            else:
                yield tail


def _transfer(a: PeriodicMatrix, alpha: Weight, cap_diag: bool, upper: bool) -> Iterator[TransferEntries]:
    n = a.n
    per_row: list[list[tuple[tuple[int, int], ...]]] = []
    for i in range(1, n + 1):
        # row i of T is capped by row i+1 (raising) / row i (lowering) of A,
        # except at the column that the row shift carries onto the diagonal
        src = i + 1 if upper else i
        free_col = i + 1 if upper else i
        positions: list[tuple[int, int | None]] = []
        seen_free = False
        for (r, c, v) in a.entries:
            if (src - r) % n == 0:
                j = c + (src - r)
                if j == free_col:
                    positions.append((j, v if cap_diag else None))
                    seen_free = True
                elif v > 0:
                    positions.append((j, v))
        if not seen_free and not cap_diag:
            positions.append((free_col, None))
        per_row.append(list(_row_choices(sorted(positions, key=lambda p: p[0]), alpha[i - 1])))

    def rec(i: int, acc: tuple[tuple[int, int, int], ...]) -> Iterator[TransferEntries]:
        if i == n:
            yield acc
            return
        for row in per_row[i]:
            yield from rec(i + 1, acc + tuple((i + 1, col, t) for col, t in row))

    yield from rec(0, ())


def transfer_upper(a: PeriodicMatrix, alpha: Weight, cap_diag: bool) -> Iterator[TransferEntries]:
    """Entry tuples of the transfer matrices T with row sums alpha for the
    raising-step formula: row i of T is capped by row i+1 of A except at
    column i+1."""
    return _transfer(a, alpha, cap_diag, upper=True)


def transfer_lower(a: PeriodicMatrix, alpha: Weight, cap_diag: bool) -> Iterator[TransferEntries]:
    """Entry tuples of the transfer matrices T with row sums alpha for the
    lowering-step formula: row i of T is capped by row i of A except at
    column i."""
    return _transfer(a, alpha, cap_diag, upper=False)


def entries_get(entries_map: Mapping[tuple[int, int], int], n: int, i: int, j: int) -> int:
    """Canonical-band lookup into a raw entry map."""
    s = (i - 1) // n
    return entries_map.get((i - s * n, j - s * n), 0)
