"""Command-line front end: JSON in, JSON (or text) out, deterministic.

Subcommands mirror the library: `schur`, `stab`, `v` and `oracle` expose the
algebra operations on serialized inputs; `verify` bundles the reproducible
verification suites.  Exit status 0 means every requested check passed.
Machine-readable failure codes: usage errors exit 2, schema/parse errors 3,
triangularity violations 4, failed verifications 1.

The environment variable AFFSCHUR_WORKERS (default 1) sets the process count
for the oracle-equivalence suite; reports are aggregated in sorted order, so
output is byte-identical across parallelism settings.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import loopalg, schur, serialize, stab, weyl
from .loopalg import VElement
from .periodic import PeriodicMatrix, theta_matrices
from .schur import SchurElement, TriangularityViolation
from .serialize import SchemaError, versioned
from .stab import KElement


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError("parse-error", f"cannot read {path}: {exc}") from None


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(versioned(doc), sort_keys=True))
    else:
        _emit_text(versioned(doc))


def _emit_text(doc, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent + 1)
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{doc}")


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("AFFSCHUR_WORKERS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# verification suites


def _oracle_pairs(n: int, r: int, band: int):
    mats = theta_matrices(n, r, band)
    by_co: dict = {}
    for m in mats:
        by_co.setdefault(m.col_sums(), []).append(m)
    for a in mats:
        for b in by_co.get(a.row_sums(), []):
            yield b, a


def _oracle_chunk(args):
    n, r, band, lo, hi = args
    mats = theta_matrices(n, r, band)
    by_co: dict = {}
    for m in mats:
        by_co.setdefault(m.col_sums(), []).append(m)
    checked = 0
    failures = []
    for a in mats[lo:hi]:
        for b in by_co.get(a.row_sums(), []):
            checked += 1
            if schur._basis_mul(b, a) != weyl.oracle_mul(b, a):
                failures.append((serialize.encode_matrix(b), serialize.encode_matrix(a)))
    return checked, failures


def suite_oracle(n: int, r: int, band: int) -> dict:
    mats_count = len(theta_matrices(n, r, band))
    workers = _workers()
    if workers == 1:
        checked, failures = _oracle_chunk((n, r, band, 0, mats_count))
    else:
        import multiprocessing as mp

        step = (mats_count + workers - 1) // workers
        jobs = [(n, r, band, lo, min(lo + step, mats_count)) for lo in range(0, mats_count, step)]
        checked, failures = 0, []
        with mp.Pool(workers) as pool:
            for c, f in pool.map(_oracle_chunk, jobs):
                checked += c
                failures.extend(f)
    failures.sort(key=lambda t: (json.dumps(t[0], sort_keys=True), json.dumps(t[1], sort_keys=True)))
    return {
        "suite": "oracle",
        "params": {"n": n, "r": r, "band": band},
        "checked": checked,
        "passed": checked - len(failures),
        "failed": len(failures),
        "failures": [
            {
                "lhs": b,
                "rhs": a,
                "repro": f"affschur oracle mul --lhs <lhs.json> --rhs <rhs.json>  # n={n} r={r}",
            }
            for b, a in failures
        ],
    }


def _random_tilde_matrix(rng: random.Random, n: int, band: int, max_entry: int, offdiag_terms: int = 2) -> PeriodicMatrix:
    entries = []
    for _ in range(rng.randint(0, offdiag_terms)):
        i = rng.randint(1, n)
        off = rng.choice([k for k in range(-band, band + 1) if k])
        entries.append((i, i + off, rng.randint(1, max_entry)))
    for i in range(1, n + 1):
        v = rng.randint(-max_entry, max_entry)
        if v:
            entries.append((i, i, v))
    return PeriodicMatrix(n, entries)


def suite_stabilization(n: int, count: int, seed: int, band: int, max_entry: int,
                        a_min: int | None = None, a_max: int | None = None) -> dict:
    rng = random.Random(seed)
    checked = 0
    failures = []
    while checked < count:
        b = _random_tilde_matrix(rng, n, band, max_entry)
        aoff = _random_tilde_matrix(rng, n, band, max_entry)
        off = aoff.upper_part() + aoff.lower_part()
        need = tuple(t - x for t, x in zip(b.col_sums(), off.row_sums()))
        a = off + PeriodicMatrix.from_diag(need)
        rep = stab.stabilization_report(b, a, a_min, a_max)
        checked += 1
        if not rep["matched"]:
            failures.append(
                {
                    "lhs": serialize.encode_matrix(b),
                    "rhs": serialize.encode_matrix(a),
                    "a_min": rep["a_min"],
                    "a_max": rep["a_max"],
                    "repro": f"affschur stab verify --lhs <lhs.json> --rhs <rhs.json> --amin {rep['a_min']} --amax {rep['a_max']}",
                }
            )
    return {
        "suite": "stabilization",
        "params": {"n": n, "count": count, "seed": seed, "band": band, "max_entry": max_entry},
        "checked": checked,
        "passed": checked - len(failures),
        "failed": len(failures),
        "failures": failures,
    }


def suite_relations(n: int, bound: int) -> dict:
    rep = loopalg.loop_relations_report(n, bound)
    return {
        "suite": "relations",
        "params": {"n": n, "bound": bound},
        "checked": rep["checked"],
        "passed": rep["passed"],
        "failed": rep["failed"],
        "failures": [
            {**f, "repro": f"affschur v relations --n {n} --bound {bound}"} for f in rep["failures"]
        ],
    }


def suite_surjectivity(n: int, r: int, band: int, include_certificates: bool = False) -> dict:
    rep = loopalg.surjectivity_certificates(n, r, band)
    out = {
        "suite": "surjectivity",
        "params": {"n": n, "r": r, "band": band},
        "checked": rep["count"],
        "passed": rep["verified"],
        "failed": rep["failed"],
        "non_integer_steps": rep["non_integer_steps"],
        "failures": [
            {
                "matrix": serialize.encode_matrix(m),
                "repro": f"affschur v surjectivity --n {n} --r {r} --band {band}",
            }
            for m in rep["failures"]
        ],
    }
    if include_certificates:
        out["certificates"] = [
            {
                "matrix": serialize.encode_matrix(c["matrix"]),
                "combination": [
                    {"matrix": serialize.encode_matrix(m), "lambda": list(lam), "coeff": coeff}
                    for (m, lam), coeff in c["combination"]
                ],
                "verified": c["verified"],
            }
            for c in rep["certificates"]
        ]
    return out


def _random_schur_element(rng: random.Random, n: int, r: int, band: int, mats, terms: int = 1) -> SchurElement:
    picked = rng.sample(mats, min(terms, len(mats)))
    return SchurElement(n, r, {m: rng.randint(1, 3) for m in picked})


def _random_velement(rng: random.Random, n: int, band: int, maxw: int = 2) -> VElement:
    entries = []
    for _ in range(rng.randint(0, 2)):
        i = rng.randint(1, n)
        off = rng.choice([k for k in range(-band, band + 1) if k])
        entries.append((i, i + off, rng.randint(1, 2)))
    lam = tuple(rng.randint(0, maxw) for _ in range(n))
    return VElement.basis(PeriodicMatrix(n, entries), lam)


def suite_properties(n: int, r: int, seed: int, count: int) -> dict:
    rng = random.Random(seed)
    checked = passed = 0
    failures = []

    def check(name, ok, data=None):
        nonlocal checked, passed
        checked += 1
        if ok:
            passed += 1
        else:
            failures.append({"property": name, "data": data or {}})

    mats = theta_matrices(n, r, 2)
    by_co: dict = {}
    for m in mats:
        by_co.setdefault(m.col_sums(), []).append(m)

    # associativity of the Schur product on compatible basis triples
    done = 0
    while done < count:
        a = rng.choice(mats)
        bs = by_co.get(a.row_sums())
        if not bs:
            continue
        b = rng.choice(bs)
        cs = by_co.get(b.row_sums())
        if not cs:
            continue
        c = rng.choice(cs)
        xa, xb, xc = SchurElement.basis(a), SchurElement.basis(b), SchurElement.basis(c)
        check("schur-associativity", schur.mul(schur.mul(xc, xb), xa) == schur.mul(xc, schur.mul(xb, xa)))
        check("tau-anti-involution", schur.tau(schur.mul(xb, xa)) == schur.mul(schur.tau(xa), schur.tau(xb)))
        done += 1

    # symbolic products: associativity and truncation homomorphism
    done = 0
    while done < count:
        b = _random_tilde_matrix(rng, n, 2, 2)
        codim = b.col_sums()
        aoff = _random_tilde_matrix(rng, n, 2, 2)
        off = aoff.upper_part() + aoff.lower_part()
        a = off + PeriodicMatrix.from_diag(tuple(t - x for t, x in zip(codim, off.row_sums())))
        coff = _random_tilde_matrix(rng, n, 2, 2)
        off2 = coff.upper_part() + coff.lower_part()
        c = off2 + PeriodicMatrix.from_diag(tuple(t - x for t, x in zip(a.col_sums(), off2.row_sums())))
        xb, xa, xc = KElement.basis(b), KElement.basis(a), KElement.basis(c)
        check("kmul-associativity", stab.kmul(stab.kmul(xb, xa), xc) == stab.kmul(xb, stab.kmul(xa, xc)))
        rr = a.entry_sum()
        lhs = stab.truncate_to_schur(stab.kmul(xb, xa), rr)
        rhs = schur.mul(stab.truncate_to_schur(xb, rr), stab.truncate_to_schur(xa, rr))
        check("truncation-homomorphism", lhs == rhs)
        done += 1

    # realization products: associativity, integrality, evaluation maps,
    # power-basis round trips
    done = 0
    while done < count:
        x = _random_velement(rng, n, 2)
        y = _random_velement(rng, n, 2)
        z = _random_velement(rng, n, 2)
        try:
            p = loopalg.vmul(x, y)
            p.assert_integral()
            check("vmul-integrality", True)
        except AssertionError:
            check("vmul-integrality", False)
            done += 1
            continue
        check("vmul-associativity", loopalg.vmul(loopalg.vmul(x, y), z) == loopalg.vmul(x, loopalg.vmul(y, z)))
        rr = r
        lhs = loopalg.eval_at_level(loopalg.vmul(x, y), rr)
        rhs = schur.mul(loopalg.eval_at_level(x, rr), loopalg.eval_at_level(y, rr))
        check("evaluation-homomorphism", lhs == rhs)
        check("power-basis-roundtrip", loopalg.from_power_basis(loopalg.to_power_basis(x)) == x)
        done += 1

    # multiplicativity of the zero power symbols
    done = 0
    while done < count:
        jj = tuple(rng.randint(0, 2) for _ in range(n))
        kk = tuple(rng.randint(0, 2) for _ in range(n))
        zj = loopalg.from_power_basis(loopalg.BracketElement(n, {(PeriodicMatrix.zero(n), jj): Fraction(1)}))
        zk = loopalg.from_power_basis(loopalg.BracketElement(n, {(PeriodicMatrix.zero(n), kk): Fraction(1)}))
        zsum = loopalg.from_power_basis(
            loopalg.BracketElement(n, {(PeriodicMatrix.zero(n), tuple(a + b for a, b in zip(jj, kk))): Fraction(1)})
        )
        check("zero-power-multiplicativity", loopalg.vmul(zj, zk) == zsum)
        done += 1

    # coproduct laws on generators
    gens = [("D", i, t) for i in range(1, n + 1) for t in range(4)]
    gens += [("E", al) for al in theta_weights(n, 3)]
    gens += [("F", al) for al in theta_weights(n, 3)]
    for g in gens:
        check("coassociativity", loopalg.coassociativity_ok(g), {"generator": str(g)})
        check("counit", loopalg.counit_ok(g), {"generator": str(g)})

    return {
        "suite": "properties",
        "params": {"n": n, "r": r, "seed": seed, "count": count},
        "checked": checked,
        "passed": passed,
        "failed": checked - passed,
        "failures": failures,
    }


def theta_weights(n: int, total_max: int):
    """Nonzero nonnegative weights of size at most total_max."""
    from .periodic import compositions

    out = []
    for s in range(1, total_max + 1):
        out.extend(compositions(s, n))
    return out


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="affschur", description=__doc__)
    top.add_argument("--format", choices=("json", "text"), default="json")
    sub = top.add_subparsers(dest="group", required=True)

    p_schur = sub.add_parser("schur").add_subparsers(dest="cmd", required=True)
    m = p_schur.add_parser("mul")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)
    for name in ("brace", "bracket", "tri-basis"):
        p = p_schur.add_parser(name)
        p.add_argument("--matrix", required=True)
        p.add_argument("--weight", required=True)
        p.add_argument("--r", type=int, required=True)
    vo = p_schur.add_parser("verify-oracle")
    vo.add_argument("--n", type=int, required=True)
    vo.add_argument("--r", type=int, required=True)
    vo.add_argument("--band", type=int, default=2)

    p_stab = sub.add_parser("stab").add_subparsers(dest="cmd", required=True)
    m = p_stab.add_parser("mul")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)
    v = p_stab.add_parser("verify")
    v.add_argument("--lhs", required=True)
    v.add_argument("--rhs", required=True)
    v.add_argument("--amin", type=int, default=None)
    v.add_argument("--amax", type=int, default=None)
    s = p_stab.add_parser("specialize")
    s.add_argument("--input", required=True)
    t = p_stab.add_parser("truncate")
    t.add_argument("--input", required=True)
    t.add_argument("--r", type=int, required=True)

    p_v = sub.add_parser("v").add_subparsers(dest="cmd", required=True)
    m = p_v.add_parser("mul")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)
    rw = p_v.add_parser("rewrite")
    rw.add_argument("--matrix", required=True)
    rw.add_argument("--weight", required=True)
    z = p_v.add_parser("zeta")
    z.add_argument("--input", required=True)
    z.add_argument("--r", type=int, required=True)
    xi = p_v.add_parser("xi")
    xi.add_argument("--monomial", required=True)
    rel = p_v.add_parser("relations")
    rel.add_argument("--n", type=int, required=True)
    rel.add_argument("--bound", type=int, default=2)
    sj = p_v.add_parser("surjectivity")
    sj.add_argument("--n", type=int, required=True)
    sj.add_argument("--r", type=int, required=True)
    sj.add_argument("--band", type=int, default=2)
    sj.add_argument("--certificates", action="store_true")
    cp = p_v.add_parser("coproduct")
    cp.add_argument("--word", required=True)
    cp.add_argument("--n", type=int, default=None)

    p_oracle = sub.add_parser("oracle").add_subparsers(dest="cmd", required=True)
    m = p_oracle.add_parser("mul")
    m.add_argument("--lhs", required=True)
    m.add_argument("--rhs", required=True)

    p_verify = sub.add_parser("verify").add_subparsers(dest="cmd", required=True)
    vo = p_verify.add_parser("oracle")
    vo.add_argument("--n", type=int, required=True)
    vo.add_argument("--r", type=int, required=True)
    vo.add_argument("--band", type=int, default=2)
    vs = p_verify.add_parser("stabilization")
    vs.add_argument("--n", type=int, required=True)
    vs.add_argument("--count", type=int, default=50)
    vs.add_argument("--seed", type=int, default=0)
    vs.add_argument("--band", type=int, default=2)
    vs.add_argument("--max-entry", type=int, default=2)
    vs.add_argument("--amin", type=int, default=None)
    vs.add_argument("--amax", type=int, default=None)
    vr = p_verify.add_parser("relations")
    vr.add_argument("--n", type=int, required=True)
    vr.add_argument("--bound", type=int, default=2)
    vj = p_verify.add_parser("surjectivity")
    vj.add_argument("--n", type=int, required=True)
    vj.add_argument("--r", type=int, required=True)
    vj.add_argument("--band", type=int, default=2)
    vp = p_verify.add_parser("properties")
    vp.add_argument("--n", type=int, required=True)
    vp.add_argument("--r", type=int, default=3)
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--count", type=int, default=25)
    return top


def _require_period(n: int) -> None:
    if n < 2:
        raise SchemaError("domain-error", f"the period must be at least 2, got {n}")


def _dispatch(args) -> tuple[dict, int]:
    g, c = args.group, args.cmd
    if g == "schur":
        if c == "mul":
            x = serialize.decode_schur(_read_json(args.lhs))
            y = serialize.decode_schur(_read_json(args.rhs))
            if (x.n, x.r) != (y.n, y.r):
                raise SchemaError("domain-error", f"algebra mismatch: ({x.n},{x.r}) vs ({y.n},{y.r})")
            return {"result": serialize.encode_schur(schur.mul(x, y))}, 0
        mtx = serialize.decode_matrix(_read_json(args.matrix))
        wt = serialize.decode_weight(_read_json(args.weight))
        if c == "brace":
            return {"result": serialize.encode_schur(schur.brace(mtx, wt, args.r))}, 0
        if c == "bracket":
            return {"result": serialize.encode_schur(schur.bracket(mtx, wt, args.r))}, 0
        if c == "tri-basis":
            return {"result": serialize.encode_schur(schur.triangular_basis(mtx, wt, args.r))}, 0
        if c == "verify-oracle":
            _require_period(args.n)
            rep = suite_oracle(args.n, args.r, args.band)
            return rep, 0 if rep["failed"] == 0 else 1
    if g == "stab":
        if c == "mul":
            x = serialize.decode_kelement(_read_json(args.lhs))
            y = serialize.decode_kelement(_read_json(args.rhs))
            return {"result": serialize.encode_kelement(stab.kmul(x, y))}, 0
        if c == "verify":
            b = serialize.decode_matrix(_read_json(args.lhs))
            a = serialize.decode_matrix(_read_json(args.rhs))
            rep = stab.stabilization_report(b, a, args.amin, args.amax)
            doc = {
                "suite": "stabilization-pair",
                "a_min": rep["a_min"],
                "a_max": rep["a_max"],
                "matched": rep["matched"],
                "keys": [
                    {
                        "matrix": serialize.encode_matrix(row["matrix"]),
                        "values": row["values"],
                        "symbolic": serialize.encode_poly(row["symbolic"]),
                        "interpolated": serialize.encode_poly(row["interpolated"]),
                        "match": row["match"],
                    }
                    for row in rep["keys"]
                ],
                "fit_failures": [serialize.encode_matrix(m) for m in rep["fit_failures"]],
            }
            return doc, 0 if rep["matched"] else 1
        if c == "specialize":
            x = serialize.decode_kelement(_read_json(args.input))
            spec = stab.specialize_at_zero(x)
            return {
                "result": {
                    "n": x.n,
                    "terms": [
                        {"matrix": serialize.encode_matrix(m), "coeff": v}
                        for m, v in sorted(spec.items(), key=lambda t: t[0].entries)
                    ],
                }
            }, 0
        if c == "truncate":
            x = serialize.decode_kelement(_read_json(args.input))
            return {"result": serialize.encode_schur(stab.truncate_to_schur(x, args.r))}, 0
    if g == "v":
        if c == "mul":
            x = serialize.decode_velement(_read_json(args.lhs))
            y = serialize.decode_velement(_read_json(args.rhs))
            return {"result": serialize.encode_velement(loopalg.vmul(x, y))}, 0
        if c == "rewrite":
            mtx = serialize.decode_matrix(_read_json(args.matrix))
            wt = serialize.decode_weight(_read_json(args.weight))
            words = loopalg.generator_words(mtx, wt)
            return {
                "result": [
                    {"word": [serialize.encode_generator(gg) for gg in word], "coeff": coeff}
                    for word, coeff in words
                ]
            }, 0
        if c == "zeta":
            x = serialize.decode_velement(_read_json(args.input))
            return {"result": serialize.encode_schur(loopalg.eval_at_level(x, args.r))}, 0
        if c == "xi":
            mono = serialize.decode_pbw(_read_json(args.monomial))
            return {"result": serialize.encode_velement(loopalg.from_pbw(mono))}, 0
        if c == "relations":
            _require_period(args.n)
            rep = suite_relations(args.n, args.bound)
            return rep, 0 if rep["failed"] == 0 else 1
        if c == "surjectivity":
            _require_period(args.n)
            rep = suite_surjectivity(args.n, args.r, args.band, include_certificates=args.certificates)
            return rep, 0 if rep["failed"] == 0 else 1
        if c == "coproduct":
            word = [loopalg.normalize_generator(serialize.decode_generator(d)) for d in _read_json(args.word)]
            n = args.n
            for gg in word:
                if gg[0] in ("E", "F"):
                    inferred = len(gg[1])
                    if n is None:
                        n = inferred
                    elif n != inferred:
                        raise SchemaError("domain-error", f"word letters disagree on the period: {n} vs {inferred}")
                elif gg[0] == "D" and n is not None and gg[1] > n:
                    raise SchemaError("domain-error", f"diagonal index {gg[1]} exceeds the period {n}")
            if n is None:
                raise SchemaError("domain-error", "pass --n: the period cannot be inferred from diagonal letters alone")
            _require_period(n)
            cw = loopalg.coproduct_word(n, word)
            return {
                "result": [
                    {
                        "left": {"matrix": serialize.encode_matrix(k1[0]), "lambda": list(k1[1])},
                        "right": {"matrix": serialize.encode_matrix(k2[0]), "lambda": list(k2[1])},
                        "coeff": v,
                    }
                    for (k1, k2), v in sorted(
                        cw.items(), key=lambda t: (t[0][0][0].entries, t[0][0][1], t[0][1][0].entries, t[0][1][1])
                    )
                ]
            }, 0
    if g == "oracle" and c == "mul":
        b = serialize.decode_matrix(_read_json(args.lhs))
        a = serialize.decode_matrix(_read_json(args.rhs))
        prod = weyl.oracle_mul(b, a)
        return {
            "lhs": serialize.encode_matrix(b),
            "rhs": serialize.encode_matrix(a),
            "product": [
                {"basis": serialize.encode_matrix(m), "coeff": coeff} for m, coeff in prod.sorted_terms()
            ],
        }, 0
    if g == "verify":
        _require_period(args.n)
        if c == "oracle":
            rep = suite_oracle(args.n, args.r, args.band)
        elif c == "stabilization":
            rep = suite_stabilization(args.n, args.count, args.seed, args.band, args.max_entry, args.amin, args.amax)
        elif c == "relations":
            rep = suite_relations(args.n, args.bound)
        elif c == "surjectivity":
            rep = suite_surjectivity(args.n, args.r, args.band)
        elif c == "properties":
            rep = suite_properties(args.n, args.r, args.seed, args.count)
        else:  # pragma: no cover
            raise SchemaError("usage", f"unknown verify suite {c}")
        return rep, 0 if rep["failed"] == 0 else 1
    raise SchemaError("usage", f"unknown command {g} {c}")  # pragma: no cover


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        doc, status = _dispatch(args)
    except SchemaError as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}}, args.format)
        return 3
    except TriangularityViolation as exc:
        _emit({"error": {"code": "triangularity-violation", "message": str(exc)}}, args.format)
        return 4
    except ValueError as exc:
        _emit({"error": {"code": "domain-error", "message": str(exc)}}, args.format)
        return 3
    _emit(doc, args.format)
    return status


def main() -> None:  # pragma: no cover
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
