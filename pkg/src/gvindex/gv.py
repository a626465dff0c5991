"""Gopakumar-Vafa invariants and the infinite-product forms of partition functions.

Conventions (fixed once, checked against the conifold):

* ``w = q - 2 + q^-1 = (q^(1/2) - q^(-1/2))^2`` and (2 sin(lambda/2))^2 = -w.
* After multi-cover removal the primitive part of log Z in class beta is
  ``G_beta = sum_g n^g (-w)^(g-1)``, so ``G_beta * w = sum_g (-1)^(g-1) n^g w^g``.
* ``sum_g n^g (-1)^g w^g = sum_g N^g chi_g`` with chi_g = q^g + q^(g-2) + ... + q^-g.
* Then Z = prod_beta prod_g prod_{k=-g/2}^{g/2} prod_{m>=0}
  (1 - q^(2k+m+1) Q^beta)^((m+1) N^g_beta).

Tables can also be reported in the "paper" spin convention, where every
N^g (and n^g) carries an extra (-1)^g.
"""

from itertools import product as iproduct
from math import gcd

from gmpy2 import mpq

from .series import FR, TruncatedSeries, mono, var_mono, ONE
from .series.monomial import digits, var_index, exponent2
from .series import kernel
from .instanton import _binom_pseries, _pmul

Qv = var_mono("q")
CONVENTIONS = ("standard", "paper")


class GVError(ArithmeticError):
    pass


class ClassLattice:
    """Curve classes as exponent vectors over named Kahler variables.

    ``gradings`` are the names that are grading variables of the partition
    function series; the rest are coefficient variables (Laurent allowed).
    """

    def __init__(self, names, bounds, gradings=None, lower=None):
        self.names = tuple(names)
        self.bounds = tuple(bounds)
        self.lower = tuple(lower) if lower is not None else (0,) * len(self.names)
        self.gradings = tuple(gradings) if gradings is not None else self.names[:1]

    def contains(self, beta):
        return all(lo <= b <= hi for b, lo, hi in zip(beta, self.lower, self.bounds))

    def classes(self):
        rng = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.bounds)]
        return [c for c in iproduct(*rng) if any(c)]

    def as_dict(self, beta):
        return {n: b for n, b in zip(self.names, beta)}


def mobius(n):
    if n == 1:
        return 1
    out = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    if n > 1:
        out = -out
    return out


def _content(beta):
    g = 0
    for b in beta:
        g = gcd(g, abs(b))
    return g


# -- per-class free energy -------------------------------------------------

def split_by_var(fr, name):
    """{exponent of ``name``: FR} with the variable stripped; denominators must not involve it."""
    if fr.atoms_depend_on(name, sign=-1):
        raise GVError("denominator depends on %s; cannot split classes" % name)
    x = fr.expand_numerator()
    i = var_index(name)
    groups = {}
    for k, v in x.num.items():
        d = digits(k).get(i, 0)
        if d % 2:
            raise GVError("half-integer power of %s" % name)
        groups.setdefault(d // 2, {})[k - (d << (32 * i))] = v
    return {e: FR(p, x.fac).cancel() for e, p in groups.items()}


def free_energy_by_class(Z, lattice):
    """log Z split into per-class FRs in q.

    Grading names come from the series, the remaining lattice names are
    split off the coefficients.
    """
    F = Z.log()
    coeff_names = [n for n in lattice.names if n not in Z.gvars]
    out = {}
    for a, c in F.coeffs.items():
        parts = {(): c}
        for name in coeff_names:
            nxt = {}
            for key, fr in parts.items():
                for e, sub in split_by_var(fr, name).items():
                    nxt[key + (e,)] = sub
            parts = nxt
        for key, fr in parts.items():
            full = dict(zip(Z.gvars, a))
            full.update(zip(coeff_names, key))
            beta = tuple(full.get(n, 0) for n in lattice.names)
            if any(beta) and fr.num:
                out[beta] = fr
    return out


def mobius_invert(F, lattice=None):
    """G_beta = sum_{k | beta} mu(k)/k * F_{beta/k}(q^k)."""
    G = {}
    for beta in F:
        c = _content(beta)
        terms = []
        for k in range(1, c + 1):
            if c % k:
                continue
            mu = mobius(k)
            if not mu:
                continue
            sub = tuple(b // k for b in beta)
            f = F.get(sub)
            if f is not None:
                terms.append(f.adams(k).scale(mpq(mu, k)))
        v = FR.sum(terms)
        if v.num:
            G[beta] = v
    return G


def cover_sum(G, lattice):
    """Inverse of :func:`mobius_invert` inside the lattice box."""
    F = {}
    for beta, g in G.items():
        k = 1
        while True:
            b = tuple(k * x for x in beta)
            if not lattice.contains(b):
                break
            F.setdefault(b, []).append(g.adams(k).scale(mpq(1, k)))
            k += 1
    return {b: FR.sum(v) for b, v in F.items()}


W = FR({Qv: ONE, 0: mpq(-2), -Qv: ONE})


def _w_power(g):
    p = {0: ONE}
    for _ in range(g):
        p = kernel.mul(p, W.num)
    return p


def _q_degree(key):
    d = exponent2(key, "q")
    if key != d * (Qv // 2):
        raise GVError("unexpected variable in a per-class coefficient")
    if d % 2:
        raise GVError("half-integer power of q")
    return d // 2


def w_expand(poly):
    """Coefficients c_g with poly = sum c_g w^g (poly palindromic in q)."""
    p = dict(poly)
    out = {}
    while p:
        top = max(_q_degree(k) for k in p)
        if top < 0:
            raise GVError("non-polynomial remainder")
        c = p[top * Qv]
        out[top] = c
        for k, v in _w_power(top).items():
            nv = p.get(k, 0) - c * v
            if nv:
                p[k] = nv
            else:
                p.pop(k, None)
    return out


def extract_gv(G):
    """{(beta, g): n^g_beta} from primitive per-class parts."""
    table = {}
    for beta, gfr in sorted(G.items()):
        P = (gfr * W).to_poly()
        if P is None:
            raise GVError("non-polynomial remainder in class %r" % (beta,))
        for g, c in w_expand(P.terms).items():
            if c.denominator != 1:
                raise GVError("non-integer coefficient in class %r" % (beta,))
            n = int(c) * (-1) ** (g + 1)
            if n:
                table[(beta, g)] = n
    return table


def _chi(g):
    return {(g - 2 * i) * Qv: ONE for i in range(g + 1)}


def n_to_N(n):
    """Genus vector {g: n^g} to {g: N^g}."""
    p = {}
    for g, v in n.items():
        for k, c in _w_power(g).items():
            p[k] = p.get(k, 0) + c * v * (-1) ** g
    p = {k: v for k, v in p.items() if v}
    out = {}
    while p:
        top = max(_q_degree(k) for k in p)
        c = p[top * Qv]
        out[top] = int(c)
        for k in _chi(top):
            nv = p.get(k, 0) - c
            if nv:
                p[k] = nv
            else:
                p.pop(k, None)
    return {g: v for g, v in out.items() if v}


def N_to_n(N):
    p = {}
    for g, v in N.items():
        for k in _chi(g):
            p[k] = p.get(k, 0) + v
    p = {k: v for k, v in p.items() if v}
    return {g: int(c) * (-1) ** g for g, c in w_expand(p).items() if c}


def by_class(table):
    out = {}
    for (beta, g), v in table.items():
        out.setdefault(beta, {})[g] = v
    return out


def n_table_to_N(table):
    out = {}
    for beta, vec in by_class(table).items():
        for g, v in n_to_N(vec).items():
            out[(beta, g)] = v
    return out


def to_convention(table, convention):
    if convention == "standard":
        return dict(table)
    if convention == "paper":
        return {(b, g): v * (-1) ** g for (b, g), v in table.items()}
    raise ValueError("unknown convention %r" % convention)


def gv_from_Z(Z, lattice):
    """n-table and N-table (standard convention) of a partition function."""
    F = free_energy_by_class(Z, lattice)
    F = {b: f for b, f in F.items() if lattice.contains(b)}
    G = mobius_invert(F, lattice)
    n = extract_gv(G)
    return n, n_table_to_N(n)


def free_energy_from_n(n_table, lattice):
    """Per-class F rebuilt through the cover sum from an n-table."""
    G = {}
    for beta, vec in by_class(n_table).items():
        terms = []
        for g, v in vec.items():
            # n^g (-w)^(g-1)
            if g >= 1:
                terms.append(FR(_w_power(g - 1)).scale((-1) ** (g - 1) * v))
            else:
                terms.append(W.inverse().scale(-v))
        G[beta] = FR.sum(terms)
    return cover_sum(G, lattice)


# -- product forms ---------------------------------------------------------

class Factor:
    """prod_{m>=0} (1 - c X q^(m+s))^((m+1) e) with X = grading monomial * coefficient key."""

    __slots__ = ("e", "grade", "key", "s", "c")

    def __init__(self, e, grade, key=0, s=0, c=1):
        self.e = e
        self.grade = tuple(grade)
        self.key = key
        self.s = s
        self.c = mpq(c)

    def __repr__(self):
        return "Factor(e=%s, grade=%s, s=%s)" % (self.e, self.grade, self.s)


def product_log(factors, gvars, cutoffs):
    """log of the product, with each m-sum resummed exactly:

    sum_m (m+1) log(1 - X q^(m+s)) = -sum_n X^n q^(ns) / (n (1 - q^n)^2).
    """
    acc = {}
    for f in factors:
        if not f.e or not any(f.grade):
            continue
        n = 1
        while True:
            g = tuple(n * x for x in f.grade)
            if any(x > c for x, c in zip(g, cutoffs)):
                break
            t = FR.binomial(n * Qv, 1, -2).scale(-f.e * f.c ** n / n, n * f.key + n * f.s * Qv)
            acc.setdefault(g, []).append(t)
            n += 1
    return TruncatedSeries(gvars, cutoffs, {g: FR.sum(v) for g, v in acc.items()})


def product_series(factors, gvars, cutoffs):
    return product_log(factors, gvars, cutoffs).exp()


def product_literal(factors, gvars, cutoffs, m_max):
    """The same product with m <= m_max, multiplied out term by term."""
    cur = {(0,) * len(gvars): {0: ONE}}
    for f in factors:
        if not f.e:
            continue
        for m in range(m_max + 1):
            e = (m + 1) * f.e
            cur = _times_power(cur, f.grade, f.key + (m + f.s) * Qv, f.c, e, cutoffs)
    return cur


def _times_power(cur, grade, key, c, e, cutoffs):
    from math import comb
    terms = []
    r = 0
    while True:
        g = tuple(r * x for x in grade)
        if any(x > k for x, k in zip(g, cutoffs)):
            break
        b = comb(e, r) * (-1) ** r if e >= 0 else comb(-e + r - 1, r)
        if b:
            terms.append((g, r * key, mpq(b) * c ** r))
        if (e >= 0 and r >= e) or not any(grade):
            break
        r += 1
    out = {}
    for a, poly in cur.items():
        for g, dk, b in terms:
            h = tuple(x + y for x, y in zip(a, g))
            if any(x > k for x, k in zip(h, cutoffs)):
                continue
            add = kernel.scale_shift(poly, b, dk)
            out[h] = kernel.add(out[h], add) if h in out else add
    return {a: p for a, p in out.items() if p}


def gv_factors(N_table, lattice, sign=1):
    """Factors of the GV product for an N-table (standard convention).

    Classes split into the series gradings and coefficient monomials.
    ``sign=-1`` gives the reciprocal orientation.
    """
    factors = []
    for (beta, g), v in sorted(N_table.items()):
        grade = tuple(b for b, n in zip(beta, lattice.names) if n in lattice.gradings)
        key = mono({n: b for b, n in zip(beta, lattice.names) if n not in lattice.gradings})
        for i in range(g + 1):
            # q^(2k + m + 1), 2k = g - 2i
            factors.append(Factor(sign * v, grade, key, g - 2 * i + 1))
    return factors


def reconstruct_Z(N_table, lattice, cutoffs, orientation="resolved"):
    """Product over classes and spins; ``orientation="printed"`` flips every exponent."""
    sign = 1 if orientation == "resolved" else -1
    return product_series(gv_factors(N_table, lattice, sign), lattice.gradings, cutoffs)


# -- named products -----------------------------------------------------------

def conifold_product_factors(sign=1):
    """prod_{m>=1} (1 - q^m Q)^(m sign)."""
    return [Factor(sign, (1,), 0, 1)]


def ruled_product_factors(var, Qc, sign=1):
    """prod_{k,m>=0} [(1-Q^{k+1}v^{k} q^{m+1})(1-Q^{k+1}v^{k+2}q^{m+1})
    / ((1-Q^{k+1}v^{k+1}q^m)(1-Q^{k+1}v^{k+1}q^{m+2}))]^((m+1) sign).

    With sign = -1 this is the product as displayed for the chi_y / 5D series.
    """
    v = var_mono(var)
    out = []
    for k in range(Qc):
        g = (k + 1,)
        out.append(Factor(sign, g, k * v, 1))
        out.append(Factor(sign, g, (k + 2) * v, 1))
        out.append(Factor(-sign, g, (k + 1) * v, 0))
        out.append(Factor(-sign, g, (k + 1) * v, 2))
    return out


# -- 6D coefficient tables -------------------------------------------------

def c_generating(P):
    """prod_{n<=P} of the six-binomial ratio, as {a: poly in q, y}."""
    y = var_mono("y")
    cur = {0: {0: ONE}}
    for n in range(1, P + 1):
        for key, e in ((y + Qv, 1), (-y - Qv, 1), (Qv, -1), (-Qv, -1),
                       (y - Qv, 1), (-y + Qv, 1), (-Qv, -1), (Qv, -1)):
            cur = _pmul(cur, _binom_pseries(key, n, e, P), P)
    return cur


def c_table(p_cutoff):
    """{(a, b, c): C(a, b, c)} for a <= p_cutoff."""
    out = {}
    for a, poly in c_generating(p_cutoff).items():
        for k, v in poly.items():
            b = exponent2(k, "q") // 2
            c = exponent2(k, "y") // 2
            if v.denominator != 1:
                raise GVError("non-integer C coefficient")
            out[(a, b, c)] = int(v)
    return out


def check_c_symmetry(C):
    return all(C.get((a, -b, c), 0) == v and C.get((a, b, -c), 0) == v
               for (a, b, c), v in C.items())


def fold_to_ctilde(C):
    """C(a, b, c) = sum_j Ct(a, j, c) [q^b in chi_j(q^2)]; keys (a, 2j, c)."""
    if not all(C.get((a, -b, c), 0) == v for (a, b, c), v in C.items()):
        raise ValueError("table is not symmetric under b -> -b")
    rows = {}
    for (a, b, c), v in C.items():
        rows.setdefault((a, c), {})[b] = v
    out = {}
    for (a, c), row in rows.items():
        row = dict(row)
        while row:
            top = max(row)
            v = row[top]
            if top < 0:
                raise ValueError("fold left a negative-degree remainder")
            out[(a, top, c)] = v
            for b in range(-top, top + 1, 2):
                nv = row.get(b, 0) - v
                if nv:
                    row[b] = nv
                else:
                    row.pop(b, None)
    return {k: v for k, v in out.items() if v}


def unfold(Ct):
    out = {}
    for (a, j2, c), v in Ct.items():
        for b in range(-j2, j2 + 1, 2):
            out[(a, b, c)] = out.get((a, b, c), 0) + v
    return {k: v for k, v in out.items() if v}


def ctilde_factors(Ct, cutoffs, sign=1):
    """Factors of the product built from C-tilde, graded by (Q, p).

    For each l >= 1 and table entry (la, 2j, c) and k = -j..j:
    [(1 - Q^l p^a q^{m+2k+1} y^{c-1})(1 - Q^l p^a q^{m+2k+1} y^{c+1})
     / ((1 - Q^l p^a q^{m+2k} y^c)(1 - Q^l p^a q^{m+2k+2} y^c))]^((m+1) Ct sign).
    """
    Qc, Pc = cutoffs
    y = var_mono("y")
    out = []
    for l in range(1, Qc + 1):
        for (A, j2, c), v in sorted(Ct.items()):
            if A % l:
                continue
            a = A // l
            if a > Pc:
                continue
            g = (l, a)
            for k2 in range(-j2, j2 + 1, 2):
                e = sign * v
                out.append(Factor(e, g, (c - 1) * y, k2 + 1))
                out.append(Factor(e, g, (c + 1) * y, k2 + 1))
                out.append(Factor(-e, g, c * y, k2))
                out.append(Factor(-e, g, c * y, k2 + 2))
    return out


def product_from_ctilde(Ct, cutoffs, orientation="resolved", check_depth=True):
    """The C-tilde product graded by (Q, p).

    The Q^l p^a coefficient uses entries up to a*l, so the table must reach
    p-degree Q-cutoff * p-cutoff; pass ``check_depth=False`` for a deliberate
    slice such as the a = 0 part alone.
    """
    Qc, Pc = cutoffs
    if check_depth and Pc:
        have = max((a for a, _, _ in Ct), default=0)
        if have < Qc * Pc:
            raise ValueError("C-tilde table reaches a=%d, need a=%d" % (have, Qc * Pc))
    sign = 1 if orientation == "resolved" else -1
    return product_series(ctilde_factors(Ct, cutoffs, sign), ("Q", "p"), cutoffs)


def ctilde_gv_prediction(Ct, cutoffs):
    """N-table (standard convention) read off the C-tilde product.

    Classes are (Q^l, p^a, y^c) with y in the normalization of the elliptic
    genus series.
    """
    Qc, Pc = cutoffs
    N = {}

    def add(key, v):
        N[key] = N.get(key, 0) + v

    for l in range(1, Qc + 1):
        for (A, j2, c), v in Ct.items():
            if A % l or A // l > Pc:
                continue
            a = A // l
            add(((l, a, c - 1), j2), v)
            add(((l, a, c + 1), j2), v)
            add(((l, a, c), j2 + 1), -v)
            if j2 >= 1:
                add(((l, a, c), j2 - 1), -v)
    return {k: v for k, v in N.items() if v}


# printed p^2 row of the C table
PRINTED_C2 = {
    (0, 0): 6, (0, 1): -4, (0, -1): -4, (0, 2): 1, (0, -2): 1,
    (1, 0): 1, (-1, 0): 1, (2, 0): 4, (-2, 0): 4,
    (1, 1): -1, (-1, 1): -1, (1, -1): -1, (-1, -1): -1,
    (2, 1): -2, (-2, 1): -2, (2, -1): -2, (-2, -1): -2,
}

EQ35 = {(0, 0): 1}
EQ36 = {(1, 1): -1, (1, -1): -1, (-1, 1): -1, (-1, -1): -1, (1, 0): 2, (-1, 0): 2}


def c_row(C, a):
    return {(b, c): v for (x, b, c), v in C.items() if x == a and v}
