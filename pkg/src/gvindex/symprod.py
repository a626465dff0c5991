"""Genera of symmetric products of the plane.

The generating series over n of the orbifold genera of (C^2)^n / S_n follow
from the genus of C^2 alone:

    log Z = sum_{l, m >= 1} Q^(lm)/m * psi_m( F_l chi(C^2) )

where ``F_l`` keeps the p-exponents divisible by l and divides them by l
(the average over l-th roots of unity followed by p -> p^(1/l)), and psi_m is
the Adams operation.  At p = 0 this collapses to the chi_y and chi_0 formulas.
"""

from math import comb

from gmpy2 import mpq

from .partitions import enumerate_partitions, cycle_type_stats
from .series import FR, TruncatedSeries, mono, var_mono, ONE
from .series.expand import expand

T1 = var_mono("t1")
T2 = var_mono("t2")
Y = var_mono("y")


def chi0_plane():
    return FR.binomial(T1, 1, -1) * FR.binomial(T2, 1, -1)


def chiy_plane():
    return chi0_plane() * FR.binomial(T1 + Y, 1, 1) * FR.binomial(T2 + Y, 1, 1)


def plane_genus(flavor, cutoff_p=0):
    """Genus of C^2 as a series in p (only the p^0 term for chi0 / chiy).

    The elliptic genus carries the y^(-1) normalization, so at p = 0 it is
    chi_y / y.
    """
    if flavor == "chi0":
        return TruncatedSeries(("p",), (cutoff_p,), {(0,): chi0_plane()})
    if flavor == "chiy":
        return TruncatedSeries(("p",), (cutoff_p,), {(0,): chiy_plane()})
    if flavor != "elliptic":
        raise ValueError("unknown flavor %r" % flavor)
    from .instanton import phi_at
    base = chiy_plane().scale(1, -Y)
    s1 = phi_at(T1, cutoff_p)
    s2 = phi_at(T2, cutoff_p)
    out = {}
    for a, x in s1.items():
        for b, z in s2.items():
            if a + b <= cutoff_p:
                out.setdefault(a + b, []).append(FR(_poly_mul(x, z)))
    return TruncatedSeries(("p",), (cutoff_p,),
                           {(a,): base * FR.sum(v) for a, v in out.items()})


def _poly_mul(a, b):
    from .series import kernel
    return kernel.mul(a, b)


def _log_from_genus(chi, Qc, Pc):
    """sum_{l,m} Q^(lm)/m psi_m(F_l chi) as a series in (Q, p)."""
    acc = {}
    for l in range(1, Qc + 1):
        f = chi.filter_contract("p", l)
        for m in range(1, Qc // l + 1):
            for (a,), c in f.coeffs.items():
                if a * m <= Pc:
                    acc.setdefault((l * m, a * m), []).append(c.adams(m).scale(mpq(1, m)))
    return TruncatedSeries(("Q", "p"), (Qc, Pc), {k: FR.sum(v) for k, v in acc.items()})


def sym_series(flavor, cutoffs):
    """Sum_n Q^n chi((C^2)^n / S_n) from the genus of C^2.

    ``cutoffs`` is the Q-order, or (Q-order, p-order) for the elliptic flavor.
    chi0 and chiy come back graded by Q alone; chiy is in the y^0 (unnormalized)
    form of the Hirzebruch genus.
    """
    if flavor == "elliptic":
        Qc, Pc = cutoffs
        chi = plane_genus("elliptic", Qc * Pc)
        return _log_from_genus(chi, Qc, Pc).exp()
    Qc = cutoffs if isinstance(cutoffs, int) else cutoffs[0]
    if flavor == "chi0":
        chi = chi0_plane()
        terms = {(n,): chi.adams(n).scale(mpq(1, n)) for n in range(1, Qc + 1)}
        return TruncatedSeries(("Q",), (Qc,), terms).exp()
    if flavor == "chiy":
        return chiy_from_elliptic_form(Qc)
    raise ValueError("unknown flavor %r" % flavor)


def chiy_from_elliptic_form(Qc):
    """exp sum_n Q^n chi_{y^n}(t^n) / (n (1 - y^n Q^n)), expanded in Q."""
    chi = chiy_plane()
    acc = {}
    for n in range(1, Qc + 1):
        c = chi.adams(n).scale(mpq(1, n))
        for l in range(0, Qc // n):
            # geometric series in y^n Q^n
            acc.setdefault(n * (l + 1), []).append(c.scale(1, n * l * Y))
    return TruncatedSeries(("Q",), (Qc,), {(k,): FR.sum(v) for k, v in acc.items()}).exp()


def chiy_p0_normalized(Qc):
    """Sum_N Q^N chi(X^N; 0, y), then Q -> yQ: the chi_y series again."""
    chi = plane_genus("elliptic", 0)
    s = _log_from_genus(chi, Qc, 0).exp().restrict("p")
    return s.scale_grading("Q", FR.monomial(Y))


def pe_chi0(Qc):
    """PE[Q chi0(C^2)] through the generic plethystic exponential."""
    s = TruncatedSeries(("Q",), (Qc,), {(1,): chi0_plane()})
    return s.plethystic_exp()


def orbifold_localization_chi0(n):
    """Twisted-sector sum over cycle types of S_n at the single fixed point."""
    terms = []
    for mu in enumerate_partitions(n):
        mult, z = cycle_type_stats(mu)
        t = FR(mpq(1, z))
        for i, m in mult.items():
            t = t * FR.binomial(i * T1, 1, -m) * FR.binomial(i * T2, 1, -m)
        terms.append(t)
    return FR.sum(terms)


def symmetric_power_taylor(n, degree):
    """Q^n coefficient of prod_{a,b>=0} 1/(1 - t1^a t2^b Q) up to t-degree ``degree``.

    Counts multisets of n lattice points of the quadrant directly (dynamic
    programming over the points), with no rational-function arithmetic.
    """
    pts = [(a, d - a) for d in range(degree + 1) for a in range(d + 1)]
    # table[j][(x, y)] = number of multisets of j points with exponent sum (x, y)
    table = [dict() for _ in range(n + 1)]
    table[0][(0, 0)] = 1
    for (a, b) in pts:
        new = [dict(t) for t in table]
        for j in range(n + 1):
            for (x, y), c in table[j].items():
                r = 1
                while j + r <= n and x + y + r * (a + b) <= degree:
                    key = (x + r * a, y + r * b)
                    new[j + r][key] = new[j + r].get(key, 0) + c
                    r += 1
                    if a + b == 0 and r > n:
                        break
        table = new
    return {mono(t1=x, t2=y): mpq(c) for (x, y), c in table[n].items() if c}


def chi0_three_way(Qc, degree=6):
    """Per-order status of the three symmetric-product chi0 computations.

    (i) the literal product over quadrant points, compared as a Taylor series
    in t1, t2; (ii) the twisted-sector sum; (iii) the exp-of-Adams form.
    Returns {n: (ok_i, ok_ii)} with each compared against (iii).
    """
    gen = sym_series("chi0", Qc)
    out = {}
    for n in range(Qc + 1):
        c = gen.coefficient(n)
        ok2 = orbifold_localization_chi0(n) == c
        ok1 = expand(c, ("t1", "t2"), degree) == symmetric_power_taylor(n, degree)
        out[n] = (ok1, ok2)
    return out


# -- generic coefficient tables ---------------------------------------------

COEFF_VARS = ("y", "t1", "t2")


def table_to_series(table, Pc):
    """sum c(m, l, k) p^m y^l t^k as a series in p."""
    acc = {}
    for key, c in table.items():
        m, l = key[0], key[1]
        ks = key[2:]
        if m > Pc or not c:
            continue
        e = {"y": l}
        for name, x in zip(COEFF_VARS[1:], ks):
            e[name] = x
        acc.setdefault(m, {})
        k = mono(e)
        acc[m][k] = acc[m].get(k, 0) + mpq(c)
    return TruncatedSeries(("p",), (Pc,), {(m,): FR(p) for m, p in acc.items()})


def generic_exp_side(table, Qc, Pc):
    chi = table_to_series(table, Qc * Pc)
    return _log_from_genus(chi, Qc, Pc).exp()


def generic_product_side(table, Qc, Pc):
    """prod_{n>=1, m>=0, l, k} (1 - Q^n p^m y^l t^k)^(-c(nm, l, k)) by binomial series."""
    cur = {(0, 0): {0: ONE}}
    for key, c in sorted(table.items()):
        if not c:
            continue
        total_m, l = key[0], key[1]
        ks = key[2:]
        e = {"y": l}
        for name, x in zip(COEFF_VARS[1:], ks):
            e[name] = x
        mk = mono(e)
        for n in range(1, Qc + 1):
            if total_m % n:
                continue
            m = total_m // n
            if m > Pc:
                continue
            cur = _times_binomial_power(cur, n, m, mk, -c, Qc, Pc)
    return TruncatedSeries(("Q", "p"), (Qc, Pc), {g: FR(v) for g, v in cur.items() if v})


def _times_binomial_power(cur, n, m, mk, e, Qc, Pc):
    """Multiply by (1 - Q^n p^m X)^e with e an integer (negative allowed)."""
    terms = []
    r = 0
    while r * n <= Qc and r * m <= Pc:
        c = comb(e, r) * (-1) ** r if e >= 0 else comb(-e + r - 1, r)
        if c:
            terms.append((r * n, r * m, r * mk, mpq(c)))
        if e >= 0 and r >= e:
            break
        r += 1
    out = {}
    from .series import kernel
    for (a, b), poly in cur.items():
        for dn, dm, dk, c in terms:
            g = (a + dn, b + dm)
            if g[0] > Qc or g[1] > Pc:
                continue
            add = kernel.scale_shift(poly, c, dk)
            out[g] = kernel.add(out[g], add) if g in out else add
    return out


def generic_pe_identity_check(c, cutoffs):
    """Exp-of-averaged-Adams form versus the literal product, within cutoffs."""
    Qc, Pc = cutoffs
    return generic_exp_side(c, Qc, Pc) == generic_product_side(c, Qc, Pc)


def random_table(rng, size=5, m_max=2, l_range=2, k_range=2, value=3):
    """Random finite-support coefficient table for property tests."""
    t = {}
    for _ in range(rng.randint(1, size)):
        key = (rng.randint(0, m_max), rng.randint(-l_range, l_range),
               rng.randint(0, k_range), rng.randint(0, k_range))
        if key[0] == 0 and key[1:] == (0, 0, 0) and rng.random() < 0.5:
            continue
        t[key] = rng.choice([v for v in range(-value, value + 1) if v])
    return t


def chiy_table(degree):
    """Taylor coefficients of chi_y(C^2) in t1, t2 up to total degree ``degree``.

    (1 - y t1)(1 - y t2)/((1 - t1)(1 - t2)): the t1^a t2^b coefficient is
    (1 - y [a > 0])(1 - y [b > 0]).
    """
    t = {}
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            fa = {0: 1, 1: -1} if a else {0: 1}
            fb = {0: 1, 1: -1} if b else {0: 1}
            for i, x in fa.items():
                for j, z in fb.items():
                    key = (0, i + j, a, b)
                    t[key] = t.get(key, 0) + x * z
    return {k: v for k, v in t.items() if v}
