"""Power-series expansion of factored rationals in a chosen set of variables.

Used only by cross-checks that want an answer independent of the factored
arithmetic, e.g. comparing a rational function against a literal infinite
product expanded term by term.
"""

from .monomial import var_index, digits
from .rational import FactoredRational, ONE
from . import kernel


class ExpansionError(ValueError):
    pass


def degree_fn(names):
    idx = [var_index(n) for n in names]

    def deg(key):
        d = digits(key)
        # doubled exponents; callers work with integral degrees
        return sum(d.get(i, 0) for i in idx) // 2

    return deg


def truncate(p, deg, top):
    return {k: v for k, v in p.items() if deg(k) <= top}


def mul_trunc(a, b, deg, top):
    out = {}
    b = [(k, v, deg(k)) for k, v in b.items()]
    lo = min((d for _, _, d in b), default=0)
    for k1, v1 in a.items():
        d1 = deg(k1)
        if d1 + lo > top:
            continue
        for k2, v2, d2 in b:
            if d1 + d2 <= top:
                k = k1 + k2
                v = out.get(k, 0) + v1 * v2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return out


def inverse_series(p, deg, top, power=1):
    """(p)^(-power) for p = 1 + (terms of positive degree), truncated."""
    rest = {k: v for k, v in p.items() if k != 0}
    if p.get(0) != 1 or any(deg(k) < 1 for k in rest):
        raise ExpansionError("factor is not 1 + (positive degree) in the expansion variables")
    inv = {0: ONE}
    term = {0: ONE}
    neg = {k: -v for k, v in rest.items()}
    for _ in range(top):
        term = mul_trunc(term, neg, deg, top)
        if not term:
            break
        inv = kernel.add(inv, term)
    out = {0: ONE}
    for _ in range(power):
        out = mul_trunc(out, inv, deg, top)
    return out


def _low(p, deg):
    return min((deg(k) for k in p), default=0)


def expand(fr, names, top):
    """Terms of ``fr`` of total degree <= top in ``names`` (other variables kept).

    Denominator factors must be 1 + (positive degree); numerator factors may
    carry negative degrees.
    """
    fr = FactoredRational._coerce(fr)
    if not fr.num:
        return {}
    deg = degree_fn(names)
    factors = [(fr.num, 1)] + [(dict(a), e) for a, e in fr.fac.items()]
    lows = []
    for p, e in factors:
        lows.append(_low(p, deg) * e if e > 0 else 0)
    total_low = sum(lows)
    out = {0: ONE}
    acc_low = 0
    for (p, e), lo in zip(factors, lows):
        # room left for this factor given the minimum degree of the others
        room = top - (total_low - lo)
        if e > 0:
            f = {0: ONE}
            for _ in range(e):
                f = mul_trunc(f, p, deg, room)
        else:
            f = inverse_series(p, deg, max(room, 0), -e)
        out = mul_trunc(out, f, deg, top - (total_low - lo - acc_low))
        acc_low += lo
    return truncate(out, deg, top)


def series_equal(a, b, names, top):
    """Compare two FRs as power series in ``names`` up to total degree ``top``."""
    x = expand(a, names, top)
    y = expand(b, names, top)
    return x == y


def expand_partial(fr, names, top):
    """Expand in ``names`` only the factors that involve them.

    Atoms free of ``names`` stay as factors of the result, so e.g. a q-rational
    coefficient can be made polynomial in Kahler variables.
    """
    fr = FactoredRational._coerce(fr)
    deg = degree_fn(names)
    keep = {}
    other = {}
    for a, e in fr.fac.items():
        if all(deg(k) == 0 for k, _ in a) and _free_of(a, names):
            keep[a] = e
        else:
            other[a] = e
    body = expand(FactoredRational(fr.num, other), names, top)
    return FactoredRational(body, keep)


def _free_of(atom, names):
    idx = [var_index(n) for n in names]
    return all(not digits(k).get(i) for k, _ in atom for i in idx)
