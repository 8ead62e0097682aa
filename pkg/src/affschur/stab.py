"""The stabilized multiplication: structure constants as polynomials.

For matrices with arbitrary diagonal entries (nonnegative off-diagonal), the
products [B + aI][A + aI] in the Schur algebras of size an + sigma have, for
large a, coefficients that are integer-valued polynomials in a.  This module
computes those polynomials directly: the semisimple closed formulas acquire a
polynomial diagonal factor C(c + x, t), and general products reduce to them by
the same chunk recursion as the finite case, applied after a diagonal shift
into nonnegative territory.  Specializing x -> 0 gives the stabilized algebra
without unit; truncation onto a fixed size r recovers each Schur algebra.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .intpoly import IP_ONE, IntPoly, binom, newton_fit
from .periodic import (
    PeriodicMatrix,
    corner_lt,
    entries_get,
    transfer_lower,
    transfer_upper,
)
from .schur import SchurElement, TriangularityViolation, _basis_mul, _shift_entry, chunk_decomposition


class KElement:
    """Finite combination of symbols [A], A with nonneg off-diagonal, with
    integer-valued-polynomial coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[PeriodicMatrix, IntPoly] | Iterable[tuple[PeriodicMatrix, IntPoly]] = ()):
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict[PeriodicMatrix, IntPoly] = {}
        for m, p in items:
            if not m.in_theta_tilde():
                raise ValueError(f"key has a negative off-diagonal entry: {m!r}")
            if not p.is_zero():
                acc[m] = acc.get(m, IntPoly()) + p if m in acc else p
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", {m: p for m, p in acc.items() if not p.is_zero()})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("KElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "KElement":
        return cls(n)

    @classmethod
    def basis(cls, a: PeriodicMatrix) -> "KElement":
        return cls(a.n, {a: IP_ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[PeriodicMatrix, IntPoly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].entries)

    def __add__(self, other: "KElement") -> "KElement":
        if self.n != other.n:
            raise ValueError("period mismatch")
        acc = dict(self.terms)
        for m, p in other.terms.items():
            acc[m] = acc.get(m, IntPoly()) + p
        return KElement(self.n, acc)

    def __sub__(self, other: "KElement") -> "KElement":
        return self + other.scale_poly(IntPoly.const(-1))

    def scale_poly(self, p: IntPoly) -> "KElement":
        return KElement(self.n, {m: q * p for m, q in self.terms.items()})

    def scale(self, c: int) -> "KElement":
        return self.scale_poly(IntPoly.const(c))

    def __mul__(self, other: "KElement") -> "KElement":
        return kmul(self, other)

    def transpose(self) -> "KElement":
        return KElement(self.n, {m.transpose(): p for m, p in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, KElement) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted((m.entries, tuple(p.coeffs.items())) for m, p in self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return f"KElement({self.n}, 0)"
        body = " + ".join(f"({p!r})*[{m!r}]" for m, p in self.sorted_terms())
        return f"KElement({self.n}, {body})"


# ---------------------------------------------------------------------------
# symbolic semisimple products


@lru_cache(maxsize=1 << 17)
def _kss_basis_mul(b: PeriodicMatrix, a: PeriodicMatrix) -> tuple[tuple[PeriodicMatrix, IntPoly], ...]:
    """Symbolic [b][a] for semisimple b: the finite closed formula with the
    diagonal binomials replaced by their shifted polynomial versions, and the
    diagonal of the result left unconstrained."""
    if b.col_sums() != a.row_sums():
        return ()
    n = a.n
    amap = a.entry_map()
    direction = b.ss_direction()
    out: list[tuple[PeriodicMatrix, IntPoly]] = []
    if direction in ("upper", "diag"):
        alpha = b.superdiag_weight()
        for tent in transfer_upper(a, alpha, cap_diag=False):
            tmap = {(i, j): v for i, j, v in tent}
            intc = 1
            poly = IP_ONE
            acc = dict(amap)
            for i, j, tv in tent:
                shifted_in = entries_get(tmap, n, i - 1, j)
                if i == j:
                    poly = poly * IntPoly.binom_shifted(a.get(i, j) - shifted_in + tv, tv)
                else:
                    intc *= binom(a.get(i, j) - shifted_in + tv, tv)
                acc[(i, j)] = acc.get((i, j), 0) + tv
                pos = _shift_entry(n, i, j)
                acc[pos] = acc.get(pos, 0) - tv
            # rows of T holding a diagonal entry of T~ but none of T need the
            # polynomial factor with t[i,i] = 0, which is 1; nothing to do
            if intc:
                out.append((PeriodicMatrix._from_canonical(n, acc), poly.scale(intc)))
    elif direction == "lower":
        alpha = b.subdiag_weight()
        for tent in transfer_lower(a, alpha, cap_diag=False):
            tmap = {(i, j): v for i, j, v in tent}
            intc = 1
            poly = IP_ONE
            acc = dict(amap)
            for i, j, tv in tent:
                pos = _shift_entry(n, i, j)
                below = entries_get(tmap, n, *pos)
                if pos[0] == pos[1]:
                    poly = poly * IntPoly.binom_shifted(a.get(*pos) + tv - below, tv)
                else:
                    intc *= binom(a.get(*pos) + tv - below, tv)
                acc[(i, j)] = acc.get((i, j), 0) - tv
                acc[pos] = acc.get(pos, 0) + tv
            if intc:
                out.append((PeriodicMatrix._from_canonical(n, acc), poly.scale(intc)))
    else:
        raise ValueError(f"not a semisimple matrix: {b!r}")
    return tuple(out)


def _kss_apply(b: PeriodicMatrix, x: KElement) -> KElement:
    acc: dict[PeriodicMatrix, IntPoly] = {}
    for a, pa in x.terms.items():
        for key, poly in _kss_basis_mul(b, a):
            prod = poly * pa
            acc[key] = acc.get(key, IntPoly()) + prod if key in acc else prod
    return KElement(x.n, acc)


def kmul_ss_upper(b: PeriodicMatrix, x: KElement) -> KElement:
    if b.ss_direction() not in ("upper", "diag"):
        raise ValueError(f"expected superdiagonal semisimple matrix: {b!r}")
    return _kss_apply(b, x)


def kmul_ss_lower(b: PeriodicMatrix, x: KElement) -> KElement:
    if b.ss_direction() not in ("lower", "diag"):
        raise ValueError(f"expected subdiagonal semisimple matrix: {b!r}")
    return _kss_apply(b, x)


# ---------------------------------------------------------------------------
# general symbolic products


def _diag_shift_needed(b: PeriodicMatrix) -> int:
    return max(0, -min(b.get(i, i) for i in range(1, b.n + 1)))


@lru_cache(maxsize=None)
def _kchunk_data(b: PeriodicMatrix) -> tuple[tuple[PeriodicMatrix, ...], tuple[tuple[PeriodicMatrix, IntPoly], ...]]:
    """(shifted-back semisimple chunks of b, lower terms of their product).

    The chunks of b + sI (s the least shift making b nonnegative) are moved
    back by -sI; their symbolic product must equal [b] plus corner-lower
    terms with polynomial coefficients and constant leading coefficient 1."""
    shift = _diag_shift_needed(b)
    chunks = tuple(c.shift_diag(-shift) for c in chunk_decomposition(b.shift_diag(shift)))
    x = KElement.basis(chunks[-1])
    for c in reversed(chunks[:-1]):
        x = _kss_apply(c, x)
    lead = x.terms.get(b)
    if lead != IP_ONE:
        raise TriangularityViolation(f"symbolic chunk product of {b!r} has leading coefficient {lead!r}")
    rows, cols, norm = b.row_sums(), b.col_sums(), b.band_norm()
    lower = []
    for key, poly in x.sorted_terms():
        if key == b:
            continue
        if key.row_sums() != rows or key.col_sums() != cols:
            raise TriangularityViolation(f"symbolic chunk product of {b!r} leaks the fiber at {key!r}")
        if key.band_norm() >= norm or not corner_lt(key, b):
            raise TriangularityViolation(f"symbolic chunk product of {b!r} has non-lower term {key!r}")
        lower.append((key, poly))
    return chunks, tuple(lower)


_KBASIS_CACHE: dict[tuple[PeriodicMatrix, PeriodicMatrix], tuple[tuple[PeriodicMatrix, IntPoly], ...]] = {}
_KBASIS_CACHE_CAP = 1 << 17


def _kbasis_mul(b: PeriodicMatrix, a: PeriodicMatrix) -> tuple[tuple[PeriodicMatrix, IntPoly], ...]:
    if b.col_sums() != a.row_sums():
        return ()
    if b.ss_direction() is not None:
        return _kss_basis_mul(b, a)
    key = (b, a)
    hit = _KBASIS_CACHE.get(key)
    if hit is not None:
        return hit
    chunks, lower = _kchunk_data(b)
    x = KElement.basis(a)
    for c in reversed(chunks):
        x = _kss_apply(c, x)
    acc = dict(x.terms)
    for b2, poly in lower:
        for m, q in _kbasis_mul(b2, a):
            prod = poly * q
            acc[m] = acc.get(m, IntPoly()) - prod if m in acc else -prod
    out = tuple((m, p) for m, p in sorted(acc.items(), key=lambda t: t[0].entries) if not p.is_zero())
    if len(_KBASIS_CACHE) >= _KBASIS_CACHE_CAP:
        _KBASIS_CACHE.clear()
    _KBASIS_CACHE[key] = out
    return out


def kmul(x: KElement, y: KElement) -> KElement:
    if x.n != y.n:
        raise ValueError("period mismatch")
    acc: dict[PeriodicMatrix, IntPoly] = {}
    for b, pb in x.terms.items():
        for a, pa in y.terms.items():
            pba = pb * pa
            for m, p in _kbasis_mul(b, a):
                prod = p * pba
                acc[m] = acc.get(m, IntPoly()) + prod if m in acc else prod
    return KElement(x.n, acc)


# ---------------------------------------------------------------------------
# specialization and truncation


def specialize_at_zero(x: KElement) -> dict[PeriodicMatrix, int]:
    """Coefficientwise x -> 0; zero coefficients are dropped."""
    return {m: c for m, p in x.terms.items() if (c := p.at_zero())}


def truncate_to_schur(x: KElement, r: int) -> SchurElement:
    """Send [A] to itself when A is nonnegative of band sum r, else to zero,
    after specializing x -> 0.  An algebra map onto the size-r Schur algebra."""
    terms = {}
    for m, c in specialize_at_zero(x).items():
        if m.in_theta() and m.entry_sum() == r:
            terms[m] = c
    return SchurElement(x.n, r, terms)


# ---------------------------------------------------------------------------
# empirical verification of the stabilization property


def default_stabilization_floor(b: PeriodicMatrix, a: PeriodicMatrix) -> int:
    """A shift from which the finite products agree with the polynomials:
    the least nonnegative-diagonal shift, plus a bandwidth margin."""
    shift = max(_diag_shift_needed(b), _diag_shift_needed(a), 1)
    margin = max(b.bandwidth(), a.bandwidth(), 1)
    return shift + margin + max(b.upper_part().entry_sum() + b.lower_part().entry_sum(),
                                a.upper_part().entry_sum() + a.lower_part().entry_sum())


def stabilization_report(
    b: PeriodicMatrix,
    a: PeriodicMatrix,
    a_min: int | None = None,
    a_max: int | None = None,
) -> dict:
    """Compare [b + cI][a + cI] across c in [a_min, a_max] with the symbolic
    product.  Coefficients of the finite products are interpolated by Newton
    forward differences; each stabilized key must carry the same polynomial
    as the symbolic multiplication."""
    if b.n != a.n:
        raise ValueError("period mismatch")
    if b.col_sums() != a.row_sums():
        raise ValueError("column sums of the left factor must match row sums of the right")
    n = b.n
    sigma = a.entry_sum()
    if a_min is None:
        a_min = default_stabilization_floor(b, a)
    if a_max is None:
        a_max = a_min + 4
    if a_min > a_max:
        raise ValueError("empty shift window")
    window = range(a_min, a_max + 1)

    finite: dict[PeriodicMatrix, list[int]] = {}
    for c in window:
        prod = _basis_mul(b.shift_diag(c), a.shift_diag(c))
        for m, v in prod.terms.items():
            finite.setdefault(m.shift_diag(-c), [0] * len(window))[c - a_min] = v
    symbolic = dict(_kbasis_mul(b, a))

    rows = []
    all_match = True
    fit_failures = []
    for key in sorted(set(finite) | set(symbolic), key=lambda m: m.entries):
        values = finite.get(key, [0] * len(window))
        poly = symbolic.get(key, IntPoly())
        fitted = newton_fit(a_min, values)
        evals_ok = all(poly.eval_at(c) == values[c - a_min] for c in window)
        fit_ok = fitted == poly
        if poly.degree() >= len(window):
            fit_failures.append(key)
            fit_ok = False
        rows.append(
            {
                "matrix": key,
                "values": list(values),
                "symbolic": poly,
                "interpolated": fitted,
                "match": evals_ok and fit_ok,
            }
        )
        all_match = all_match and evals_ok and fit_ok
    return {
        "n": n,
        "sigma": sigma,
        "lhs": b,
        "rhs": a,
        "a_min": a_min,
        "a_max": a_max,
        "keys": rows,
        "fit_failures": fit_failures,
        "matched": all_match,
    }


def clear_caches() -> None:
    _kss_basis_mul.cache_clear()
    _kchunk_data.cache_clear()
    _KBASIS_CACHE.clear()
