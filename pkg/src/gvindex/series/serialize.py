"""Deterministic JSON / CSV emitters for series and integer tables.

Coefficients go through :meth:`FactoredRational.binomial_form`, so two equal
series serialize to the same bytes however they were computed.  Monomials are
``{variable: doubled exponent}`` maps and rationals are ``"p/q"`` strings.
"""

import csv
import io
import json

from gmpy2 import mpq

from .monomial import REGISTRY, to_dict, mono_doubled, mono_str
from .rational import FactoredRational, poly_str
from .truncated import TruncatedSeries


def mono_json(key):
    d = to_dict(key)
    return {n: d[n] for n in sorted(d, key=REGISTRY.index.__getitem__)}


def rat_str(v):
    v = mpq(v)
    return "%d/%d" % (v.numerator, v.denominator)


def _parse_rat(s):
    n, _, d = s.partition("/")
    return mpq(int(n), int(d or 1))


def _poly_json(p):
    return [[mono_json(k), rat_str(v)] for k, v in sorted(p.items())]


def coefficient_json(fr):
    num, den, rest = fr.binomial_form()
    out = {"num": _poly_json(num), "den": [[mono_json(m), e] for m, e in den]}
    if rest.fac:
        # non-cyclotomic atoms: listed as polynomials with signed multiplicity
        out["atoms"] = [[_poly_json(dict(a)), e] for a, e in sorted(rest.fac.items())]
    return out


def coefficient_from_json(obj):
    num = {mono_doubled(m): _parse_rat(v) for m, v in obj["num"]}
    out = FactoredRational(num)
    for m, e in obj["den"]:
        out = out * FactoredRational.binomial(mono_doubled(m), 1, -e)
    for p, e in obj.get("atoms", []):
        out = out * FactoredRational.factor_of({mono_doubled(m): _parse_rat(v) for m, v in p}, e)
    return out


def series_json(s):
    terms = []
    for a in sorted(s.coeffs):
        t = {"grading": dict(zip(s.gvars, a))}
        t.update(coefficient_json(s.coeffs[a]))
        terms.append(t)
    return {"cutoffs": dict(zip(s.gvars, s.cutoffs)), "terms": terms}


def series_from_json(obj):
    gvars = tuple(obj["cutoffs"])
    cutoffs = tuple(obj["cutoffs"][g] for g in gvars)
    coeffs = {}
    for t in obj["terms"]:
        coeffs[tuple(t["grading"][g] for g in gvars)] = coefficient_from_json(t)
    return TruncatedSeries(gvars, cutoffs, coeffs)


def series_csv_rows(s):
    """Header plus one row per grading: exponents, numerator, denominator."""
    rows = [list(s.gvars) + ["numerator", "denominator"]]
    for a in sorted(s.coeffs):
        num, den, rest = s.coeffs[a].binomial_form()
        d = ["(1 - %s)%s" % (mono_str(m), "^%d" % e if e != 1 else "") for m, e in den]
        if rest.fac:
            d.append("1/(%s)" % rest)
        rows.append(list(a) + [poly_str(num), "*".join(d) or "1"])
    return rows


def dumps(obj):
    return json.dumps(obj, separators=(",", ":")) + "\n"


def csv_text(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()
