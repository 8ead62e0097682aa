"""Canonical JSON encodings for every value type.

All documents carry a top-level "schema_version".  Encoders emit entries and
terms in a fixed sorted order so output is byte-identical across runs;
decoders validate shapes and raise SchemaError with a machine-readable code.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .intpoly import IntPoly
from .loopalg import BracketElement, PBWMonomial, VElement
from .periodic import PeriodicMatrix, Weight
from .schur import SchurElement
from .stab import KElement
from .weyl import AffinePermutation

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _need(doc: Any, key: str, kind, code: str):
    if not isinstance(doc, dict) or key not in doc:
        raise SchemaError(code, f"missing field {key!r}")
    val = doc[key]
    if kind is int and isinstance(val, bool):
        raise SchemaError(code, f"field {key!r} must be an integer")
    if not isinstance(val, kind):
        raise SchemaError(code, f"field {key!r} has wrong type {type(val).__name__}")
    return val


def versioned(payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, **payload}


# -- matrices


def encode_matrix(m: PeriodicMatrix) -> dict:
    return {"n": m.n, "entries": [[i, j, v] for i, j, v in m.entries]}


def decode_matrix(doc: Any) -> PeriodicMatrix:
    n = _need(doc, "n", int, "matrix")
    entries = _need(doc, "entries", list, "matrix")
    triples = []
    for ent in entries:
        if not (isinstance(ent, list) and len(ent) == 3 and all(isinstance(x, int) and not isinstance(x, bool) for x in ent)):
            raise SchemaError("matrix", f"bad entry {ent!r}")
        triples.append(tuple(ent))
    return PeriodicMatrix(n, triples)


# -- weights


def encode_weight(w: Weight) -> dict:
    return {"n": len(w), "coords": list(w)}


def decode_weight(doc: Any) -> Weight:
    n = _need(doc, "n", int, "weight")
    coords = _need(doc, "coords", list, "weight")
    if len(coords) != n or not all(isinstance(x, int) and not isinstance(x, bool) for x in coords):
        raise SchemaError("weight", f"bad coords {coords!r}")
    return tuple(coords)


# -- integer-valued polynomials


def encode_poly(p: IntPoly) -> dict:
    return {"binom_coeffs": {str(k): c for k, c in sorted(p.coeffs.items())}}


def decode_poly(doc: Any) -> IntPoly:
    raw = _need(doc, "binom_coeffs", dict, "poly")
    coeffs = {}
    for k, c in raw.items():
        try:
            deg = int(k)
        except ValueError:
            raise SchemaError("poly", f"bad degree key {k!r}") from None
        if not isinstance(c, int) or isinstance(c, bool):
            raise SchemaError("poly", f"bad coefficient {c!r}")
        coeffs[deg] = c
    return IntPoly(coeffs)


# -- affine permutations


def encode_permutation(w: AffinePermutation) -> dict:
    return {"r": w.r, "window": list(w.window)}


def decode_permutation(doc: Any) -> AffinePermutation:
    r = _need(doc, "r", int, "permutation")
    window = _need(doc, "window", list, "permutation")
    if len(window) != r or not all(isinstance(x, int) and not isinstance(x, bool) for x in window):
        raise SchemaError("permutation", f"bad window {window!r}")
    try:
        return AffinePermutation(tuple(window))
    except ValueError as exc:
        raise SchemaError("permutation", str(exc)) from None


# -- algebra elements


def encode_schur(x: SchurElement) -> dict:
    return {
        "n": x.n,
        "r": x.r,
        "terms": [{"matrix": encode_matrix(m), "coeff": c} for m, c in x.sorted_terms()],
    }


def decode_schur(doc: Any) -> SchurElement:
    n = _need(doc, "n", int, "schur")
    r = _need(doc, "r", int, "schur")
    terms = []
    for t in _need(doc, "terms", list, "schur"):
        m = decode_matrix(_need(t, "matrix", dict, "schur"))
        c = _need(t, "coeff", int, "schur")
        if m.n != n:
            raise SchemaError("schur", f"term period {m.n} != {n}")
        if m.entry_sum() != r:
            raise SchemaError("schur", f"term band sum {m.entry_sum()} != {r}")
        if not m.in_theta():
            raise SchemaError("schur", f"term {m!r} has negative entries")
        terms.append((m, c))
    return SchurElement(n, r, terms)


def encode_kelement(x: KElement) -> dict:
    return {
        "n": x.n,
        "terms": [{"matrix": encode_matrix(m), "coeff": encode_poly(p)} for m, p in x.sorted_terms()],
    }


def decode_kelement(doc: Any) -> KElement:
    n = _need(doc, "n", int, "kelement")
    terms = []
    for t in _need(doc, "terms", list, "kelement"):
        m = decode_matrix(_need(t, "matrix", dict, "kelement"))
        p = decode_poly(_need(t, "coeff", dict, "kelement"))
        if m.n != n:
            raise SchemaError("kelement", f"term period {m.n} != {n}")
        if not m.in_theta_tilde():
            raise SchemaError("kelement", f"term {m!r} has a negative off-diagonal entry")
        terms.append((m, p))
    return KElement(n, terms)


def encode_velement(x: VElement) -> dict:
    terms = []
    for (m, lam), c in x.sorted_terms():
        if isinstance(c, Fraction):
            raise SchemaError("velement", "cannot encode rational coefficients")
        terms.append({"matrix": encode_matrix(m), "lambda": list(lam), "coeff": c})
    return {"n": x.n, "terms": terms}


def decode_velement(doc: Any) -> VElement:
    n = _need(doc, "n", int, "velement")
    terms = []
    for t in _need(doc, "terms", list, "velement"):
        m = decode_matrix(_need(t, "matrix", dict, "velement"))
        lam = _need(t, "lambda", list, "velement")
        c = _need(t, "coeff", int, "velement")
        if m.n != n or len(lam) != n:
            raise SchemaError("velement", "period mismatch in term")
        if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in lam):
            raise SchemaError("velement", f"bad weight {lam!r}")
        if not m.in_theta_pm():
            raise SchemaError("velement", f"term {m!r} not zero-diagonal nonnegative")
        terms.append(((m, tuple(lam)), c))
    return VElement(n, terms)


def encode_bracket(x: BracketElement) -> dict:
    terms = []
    for (m, jj), c in x.sorted_terms():
        terms.append(
            {
                "matrix": encode_matrix(m),
                "power": list(jj),
                "coeff": {"numerator": c.numerator, "denominator": c.denominator},
            }
        )
    return {"n": x.n, "terms": terms}


def encode_pbw(m: PBWMonomial) -> dict:
    return {
        "n": m.n,
        "upper": [[i, j, e] for (i, j), e in m.upper],
        "diag": list(m.diag),
        "lower": [[i, j, e] for (i, j), e in m.lower],
    }


def decode_pbw(doc: Any) -> PBWMonomial:
    n = _need(doc, "n", int, "pbw")
    def side(key):
        out = []
        for ent in _need(doc, key, list, "pbw"):
            if not (isinstance(ent, list) and len(ent) == 3 and all(isinstance(x, int) and not isinstance(x, bool) for x in ent)):
                raise SchemaError("pbw", f"bad {key} entry {ent!r}")
            out.append(((ent[0], ent[1]), ent[2]))
        return out
    diag = _need(doc, "diag", list, "pbw")
    if len(diag) != n or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in diag):
        raise SchemaError("pbw", f"bad diag {diag!r}")
    try:
        return PBWMonomial(n, side("upper"), tuple(diag), side("lower"))
    except ValueError as exc:
        raise SchemaError("pbw", str(exc)) from None


# -- generator words


def encode_generator(g: tuple) -> dict:
    if g == ("1",):
        return {"kind": "unit"}
    if g[0] == "E":
        return {"kind": "raise", "alpha": list(g[1])}
    if g[0] == "F":
        return {"kind": "lower", "alpha": list(g[1])}
    if g[0] == "D":
        return {"kind": "diag", "i": g[1], "t": g[2]}
    raise SchemaError("generator", f"unknown generator {g!r}")


def decode_generator(doc: Any) -> tuple:
    kind = _need(doc, "kind", str, "generator")
    if kind == "unit":
        return ("1",)
    if kind in ("raise", "lower"):
        alpha = _need(doc, "alpha", list, "generator")
        if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in alpha):
            raise SchemaError("generator", f"bad alpha {alpha!r}")
        return ("E" if kind == "raise" else "F", tuple(alpha))
    if kind == "diag":
        return ("D", _need(doc, "i", int, "generator"), _need(doc, "t", int, "generator"))
    raise SchemaError("generator", f"unknown kind {kind!r}")
