"""Exact binomial arithmetic and the ring of integer-valued polynomials.

The generalized binomial coefficient C(m, t) = m(m-1)...(m-t+1)/t! is defined
for every integer m and t >= 0; it vanishes exactly when 0 <= m < t.  Integer-
valued polynomials are stored on the basis {C(x, k) : k >= 0}, which is closed
under products and makes evaluation and the specialization x -> 0 exact
integer operations.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence


def binom(m: int, t: int) -> int:
    """Falling-factorial binomial coefficient; m may be negative."""
    if t < 0:
        raise ValueError(f"lower index must be nonnegative, got {t}")
    if t == 0:
        return 1
    if 0 <= m < t:
        return 0
    num = 1
    for s in range(t):
        num *= m - s
    den = 1
    for s in range(2, t + 1):
        den *= s
    return num // den


def weight_binom(alpha: Sequence[int], lam: Sequence[int]) -> int:
    """Coordinatewise product of binomials C(alpha_i, lam_i)."""
    out = 1
    for a, l in zip(alpha, lam, strict=True):
        out *= binom(a, l)
        if out == 0:
            return 0
    return out


def multinom(m: int, parts: Sequence[int]) -> int:
    """Generalized multinomial: the iterated product C(m,k1) C(m-k1,k2) ...

    For m >= 0 with sum(parts) == m this is the ordinary m!/(k1! k2! ...).
    """
    out = 1
    rem = m
    for k in parts:
        out *= binom(rem, k)
        if out == 0:
            return 0
        rem -= k
    return out


def weight_multinom(top: Sequence[int], parts: Sequence[Sequence[int]]) -> int:
    """Coordinatewise multinomial with weight-valued top and parts."""
    out = 1
    for i, m in enumerate(top):
        out *= multinom(m, [p[i] for p in parts])
        if out == 0:
            return 0
    return out


@lru_cache(maxsize=None)
def stirling1_row(k: int) -> tuple[int, ...]:
    """Coefficients of the falling factorial x(x-1)...(x-k+1) in powers of x."""
    if k == 0:
        return (1,)
    prev = stirling1_row(k - 1)
    row = [0] * (k + 1)
    for m, c in enumerate(prev):
        row[m + 1] += c
        row[m] -= (k - 1) * c
    return tuple(row)


@lru_cache(maxsize=None)
def stirling2_row(m: int) -> tuple[int, ...]:
    """S(m, k) for k = 0..m: x^m = sum_k S(m,k) * k! * C(x,k)."""
    if m == 0:
        return (1,)
    prev = stirling2_row(m - 1)
    row = [0] * (m + 1)
    for k, c in enumerate(prev):
        row[k] += k * c
        row[k + 1] += c
    return tuple(row)


class IntPoly:
    """Integer-valued polynomial sum_k c_k C(x, k), c_k in Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for k, c in items:
            if k < 0:
                raise ValueError("binomial-basis degree must be nonnegative")
            if c:
                acc[k] = acc.get(k, 0) + c
        object.__setattr__(self, "coeffs", {k: c for k, c in sorted(acc.items()) if c})

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls({0: c})

    @classmethod
    def x(cls) -> "IntPoly":
        return cls({1: 1})

    @classmethod
    def binom_basis(cls, k: int) -> "IntPoly":
        """C(x, k)."""
        return cls({k: 1})

    @classmethod
    def binom_shifted(cls, a: int, t: int) -> "IntPoly":
        """C(a + x, t) = sum_j C(a, t-j) C(x, j)."""
        return cls({j: binom(a, t - j) for j in range(t + 1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return IntPoly(acc)

    def __neg__(self) -> "IntPoly":
        return IntPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly({k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        # C(x,a) C(x,b) = sum_c multinom(a+b-c; c, a-c, b-c) C(x, a+b-c)
        acc: dict[int, int] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                cab = ca * cb
                for c in range(min(a, b) + 1):
                    k = a + b - c
                    acc[k] = acc.get(k, 0) + cab * multinom(k, (c, a - c, b - c))
        return IntPoly(acc)

    def eval_at(self, v: int) -> int:
        return sum(c * binom(v, k) for k, c in self.coeffs.items())

    def at_zero(self) -> int:
        """Specialization x -> 0, i.e. the constant coefficient."""
        return self.coeffs.get(0, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly(0)"
        bits = []
        for k, c in self.coeffs.items():
            if k == 0:
                bits.append(str(c))
            else:
                lead = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                bits.append(f"{lead}C(x,{k})")
        return "IntPoly(" + " + ".join(bits).replace("+ -", "- ") + ")"


IP_ZERO = IntPoly()
IP_ONE = IntPoly.const(1)


def newton_fit(a0: int, values: Sequence[int]) -> IntPoly:
    """The unique integer-valued polynomial of degree < len(values) taking the
    given values at the consecutive integers a0, a0+1, ...; computed by forward
    differences, expressed on the C(x, k) basis via C(x - a0, j)."""
    diffs = list(values)
    out = IP_ZERO
    for j in range(len(values)):
        if diffs[0]:
            out = out + IntPoly.binom_shifted(-a0, j).scale(diffs[0])
        diffs = [diffs[s + 1] - diffs[s] for s in range(len(diffs) - 1)]
    return out


def weight_power(lam: Sequence[int], jj: Sequence[int]) -> int:
    """lam^jj = prod lam_i^(j_i), with 0^0 = 1."""
    out = 1
    for l, j in zip(lam, jj, strict=True):
        out *= l**j
    return out
