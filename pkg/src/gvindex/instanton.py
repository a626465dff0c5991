"""Torus localization on framed moduli spaces M(N, k).

Fixed points are N-tuples of partitions.  Every localization factor is built
from the tangent weights ``w`` at a fixed point (a monomial in t1, t2 and the
framing variables e_1..e_N):

* chi0:      1 / (1 - w)
* chiy:      (1 - y w) / (1 - w)
* elliptic:  y^(-1/2) (1 - y w)/(1 - w) * Phi(p; y, w)
* Dirac index twisted by (det V*)^m:  1 / (w^(1/2) - w^(-1/2)) per weight

with ``Phi(p; y, x) = prod_{n>=1} (1 - y p^n x)(1 - y^-1 p^n x^-1) /
((1 - p^n x)(1 - p^n x^-1))``.  The same weights (not their inverses) are
used for every flavor so that the N=1 formulas line up with the symmetric
product side.

The sinh-form identities are handled by :class:`SinhProduct`, an exact
multiplicative normal form for products of ``sinh(beta/2 (a_alpha - a_gamma + h n))``.
"""

from collections import Counter
from functools import lru_cache
from math import comb

from gmpy2 import mpq

from .partitions import enumerate_multipartitions, part, transpose, kappa, Partition
from .series import (FR, TruncatedSeries, mono, var_mono, ONE)
from .series.rational import kernel

FLAVORS = ("chi0", "chiy", "elliptic")


class FixedPoint:
    """Torus fixed point of M(N, k): an N-tuple of partitions."""

    __slots__ = ("mu", "N")

    def __init__(self, mu, N=None):
        self.mu = tuple(p if isinstance(p, Partition) else Partition(p) for p in mu)
        self.N = len(self.mu) if N is None else N
        if self.N != len(self.mu):
            raise ValueError("need one partition per framing direction")

    @property
    def k(self):
        return sum(sum(p) for p in self.mu)

    def __repr__(self):
        return "FixedPoint(%s)" % [list(p) for p in self.mu]


def _fp(x):
    return x if isinstance(x, FixedPoint) else FixedPoint(x)


def e_var(alpha):
    return "e%d" % alpha


# -- weights ---------------------------------------------------------------

def tangent_weights_exps(fp):
    """Weights as tuples (gamma, alpha, a, b) meaning e_gamma e_alpha^-1 t1^a t2^b."""
    fp = _fp(fp)
    out = []
    mus = fp.mu
    tr = [transpose(m) for m in mus]
    for a in range(fp.N):
        for g in range(fp.N):
            ma, mg = mus[a], mus[g]
            for i, row in enumerate(ma, 1):
                for j in range(1, row + 1):
                    out.append((g, a, -(part(tr[g], j) - i), part(ma, i) - j + 1))
            for i, row in enumerate(mg, 1):
                for j in range(1, row + 1):
                    out.append((g, a, part(tr[a], j) - i + 1, -(part(mg, i) - j)))
    return out


def _weight_key(w):
    g, a, x, y = w
    key = mono(t1=x, t2=y)
    if g != a:
        key += var_mono(e_var(g + 1)) - var_mono(e_var(a + 1))
    return key


def tangent_weights(fp):
    """Packed monomials of the 2Nk tangent weights (with multiplicity)."""
    return [_weight_key(w) for w in tangent_weights_exps(fp)]


def v_bundle_weights(fp):
    """Weights of the tautological bundle V and the weight of det V*."""
    fp = _fp(fp)
    ws = []
    for a, mu in enumerate(fp.mu):
        for i, row in enumerate(mu, 1):
            for j in range(1, row + 1):
                ws.append(var_mono(e_var(a + 1)) + mono(t1=-(i - 1), t2=-(j - 1)))
    return ws, -sum(ws)


# -- per-fixed-point contributions ----------------------------------------

def _chi0_term(ws):
    out = FR(ONE)
    for w in ws:
        out = out * FR.binomial(w, 1, -1)
    return out


def _chiy_term(ws):
    y = var_mono("y")
    out = FR(ONE)
    for w in ws:
        out = out * FR.binomial(w, 1, -1) * FR.binomial(w + y, 1, 1)
    return out


def dirac_factor(w):
    """1/(w^(1/2) - w^(-1/2)) = -w^(1/2)/(1 - w)."""
    return FR.binomial(w, 1, -1).scale(-1, _half_key(w))


def _dirac_term(ws):
    out = FR(ONE)
    shift = 0
    sign = 1
    for w in ws:
        out = out * FR.binomial(w, 1, -1)
        shift += w
        sign = -sign
    # prod of -w^(1/2)
    return out.scale(sign, _half_key(shift))


@lru_cache(maxsize=None)
def phi_template(P):
    """Phi(p; y, x) to p-order P as {a: {key: coeff}} (keys in y and x)."""
    y = var_mono("y")
    x = var_mono("x")
    cur = {0: {0: ONE}}
    for n in range(1, P + 1):
        for mkey, c, e in ((y + x, 1, 1), (-y - x, 1, 1), (x, 1, -1), (-x, 1, -1)):
            cur = _pmul(cur, _binom_pseries(mkey, n, e, P), P)
    return cur


def _binom_pseries(mkey, n, e, P):
    """(1 - M p^n)^e as {a: poly}."""
    out = {}
    r = 0
    while n * r <= P:
        # generalized binomial coefficient of (-M p^n)^r
        c = comb(e, r) * (-1) ** r if e >= 0 else comb(-e + r - 1, r)
        if c:
            out[n * r] = {mkey * r: mpq(c)}
        if e >= 0 and r >= e:
            break
        r += 1
    return out


def _pmul(a, b, P):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= P:
                t = kernel.mul(x, y)
                out[i + j] = kernel.add(out[i + j], t) if i + j in out else t
    return {k: v for k, v in out.items() if v}


def phi_at(w, P):
    """Phi(p; y, w) for a packed weight w, as {a: poly}."""
    xi = var_mono("x")
    from .series.monomial import exponent2
    out = {}
    for a, poly in phi_template(P).items():
        np = {}
        for k, v in poly.items():
            d = exponent2(k, "x") // 2
            nk = k - d * xi + d * w
            np[nk] = np.get(nk, 0) + v
        out[a] = np
    return out


def _elliptic_term(ws, P):
    """{p-order: FR} for one fixed point (including the y^(-1/2) per weight)."""
    base = _chiy_term(ws)
    ser = {0: {0: ONE}}
    for w in ws:
        ser = _pmul(ser, phi_at(w, P), P)
    ny = -len(ws)  # doubled exponent of y^(-1/2) per weight
    yk = var_mono("y", ny)
    return {a: (base * FR(poly)).scale(1, yk) for a, poly in ser.items()}


def fixed_point_contribution(fp, flavor, P=0):
    ws = tangent_weights(fp)
    if flavor == "chi0":
        return _chi0_term(ws)
    if flavor == "chiy":
        return _chiy_term(ws)
    if flavor == "elliptic":
        return _elliptic_term(ws, P)
    raise ValueError("unknown flavor %r" % flavor)


def genus_series(N, flavor, cutoffs, workers=1):
    """Sum over fixed points of M(N, k), k <= Q-cutoff.

    ``cutoffs`` is the Q-order (chi0/chiy) or ``(Q-order, p-order)`` (elliptic).
    Returns a series in Q (or in Q and p).
    """
    if flavor not in FLAVORS:
        raise ValueError("unknown flavor %r" % flavor)
    if flavor == "elliptic":
        qc, pc = cutoffs
        out = {}
        for k in range(qc + 1):
            terms = _map(lambda fp: _elliptic_term(tangent_weights(fp), pc),
                         enumerate_multipartitions(N, k), workers)
            acc = {}
            for t in terms:
                for a, c in t.items():
                    acc.setdefault(a, []).append(c)
            for a, cs in acc.items():
                out[(k, a)] = FR.sum(cs)
        return TruncatedSeries(("Q", "p"), (qc, pc), out)
    qc = cutoffs if isinstance(cutoffs, int) else cutoffs[0]
    f = _chi0_term if flavor == "chi0" else _chiy_term
    out = {}
    for k in range(qc + 1):
        terms = _map(lambda fp: f(tangent_weights(fp)), enumerate_multipartitions(N, k), workers)
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (qc,), out)


def _map(fn, items, workers):
    items = [FixedPoint(m) for m in items]
    if workers and workers > 1 and len(items) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(workers) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def twisted_index_term(fp, m):
    """Dirac index contribution twisted by (det V*)^m (m < 0 gives det V)."""
    fp = _fp(fp)
    ws = tangent_weights(fp)
    _, det_dual = v_bundle_weights(fp)
    out = _dirac_term(ws)
    if m:
        out = out.scale(1, m * det_dual)
    return out


def twisted_index_series(N, m, Q_cutoff, workers=1):
    out = {}
    for k in range(Q_cutoff + 1):
        terms = _map(lambda fp: twisted_index_term(fp, m), enumerate_multipartitions(N, k), workers)
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (Q_cutoff,), out)


# -- sinh products ---------------------------------------------------------

class SinhProduct:
    """``const * prod S(alpha, gamma, n)^e`` with S = sinh(beta/2 (a_alpha - a_gamma + h n)).

    Atoms are stored in the orientation alpha < gamma, or alpha == gamma and
    n > 0; the reflection S(gamma, alpha, -n) = -S(alpha, gamma, n) is folded
    into the constant.
    """

    __slots__ = ("const", "atoms")

    def __init__(self, const=1, atoms=None):
        self.const = mpq(const)
        self.atoms = {a: e for a, e in (atoms or {}).items() if e}

    @staticmethod
    def canonical(alpha, gamma, n):
        if alpha < gamma or (alpha == gamma and n > 0):
            return (alpha, gamma, n), 1
        if alpha == gamma and n == 0:
            return None, 0
        return (gamma, alpha, -n), -1

    def mul_atom(self, alpha, gamma, n, e=1):
        key, sign = self.canonical(alpha, gamma, n)
        if key is None:
            if e < 0:
                raise ZeroDivisionError("sinh(0) in a denominator")
            self.const = mpq(0)
            return self
        if sign < 0 and e % 2:
            self.const = -self.const
        v = self.atoms.get(key, 0) + e
        if v:
            self.atoms[key] = v
        else:
            self.atoms.pop(key, None)
        return self

    def __mul__(self, other):
        out = SinhProduct(self.const * other.const, dict(self.atoms))
        for a, e in other.atoms.items():
            v = out.atoms.get(a, 0) + e
            if v:
                out.atoms[a] = v
            else:
                out.atoms.pop(a)
        return out

    def __eq__(self, other):
        return self.const == other.const and (self.atoms == other.atoms or self.const == 0)

    def to_fr(self, ratio):
        """Rewrite with S = (M^(-1/2) - M^(1/2))/2, M = (e_a/e_g) q^n.

        ``ratio(alpha, gamma)`` returns the packed monomial for e_alpha/e_gamma
        (1-based indices); q is the variable ``q``.
        """
        out = FR(self.const)
        shift = 0
        half = mpq(1, 2)
        const = ONE
        for (a, g, n), e in sorted(self.atoms.items()):
            M = (ratio(a, g) if a != g else 0) + mono(q=n)
            # S = (1/2) M^(-1/2) (1 - M)
            out = out * FR.binomial(M, 1, e)
            shift += -e * M
            const *= half ** e if e > 0 else 1 / half ** (-e)
        return out.scale(const, _half_key(shift))

    def __repr__(self):
        return "SinhProduct(%s, %s)" % (self.const, dict(sorted(self.atoms.items())))


def _half_key(key):
    """Packed monomial with every doubled exponent halved (must stay on the lattice)."""
    from .series.monomial import digits, SHIFT
    out = 0
    for i, d in digits(key).items():
        if d % 2:
            raise ArithmeticError("monomial square root leaves the half-integer lattice")
        out += (d // 2) << (SHIFT * i)
    return out


def konishi_lhs(mus):
    """Left side of the hook/sinh identity as a SinhProduct."""
    mus = [Partition(m) for m in mus]
    N = len(mus)
    tr = [transpose(m) for m in mus]
    out = SinhProduct(1)
    for a in range(N):
        for g in range(N):
            for i, row in enumerate(mus[a], 1):
                for j in range(1, row + 1):
                    out.mul_atom(a + 1, g + 1, part(mus[a], i) + part(tr[g], j) - i - j + 1, -1)
            for i, row in enumerate(mus[g], 1):
                for j in range(1, row + 1):
                    out.mul_atom(a + 1, g + 1, -(part(mus[g], i) + part(tr[a], j) - i - j + 1), -1)
    return out


def _pair_character(mu, nu, L):
    c = Counter()
    for i in range(1, L + 1):
        for j in range(1, L + 1):
            c[part(mu, i) - part(nu, j) + j - i] += 1
            c[j - i] -= 1
    return c


def default_bounds(mus):
    total = sum(sum(m) for m in mus)
    lmax = max((len(m) for m in mus), default=0)
    return lmax + total + 2, total


def konishi_rhs(mus, L=None, threshold=None, with_boundary=False):
    """Right side truncated at i, j <= L, bulk part (|n| <= threshold).

    Returns the SinhProduct of the bulk and, if requested, the dropped
    boundary character as a Counter of (alpha, gamma, n).
    """
    mus = [Partition(m) for m in mus]
    N = len(mus)
    L0, T0 = default_bounds(mus)
    L = L0 if L is None else L
    T = T0 if threshold is None else threshold
    out = SinhProduct(1)
    boundary = Counter()
    for a in range(N):
        for g in range(N):
            ch = _pair_character(mus[a], mus[g], L)
            for n, e in sorted(ch.items()):
                if not e:
                    continue
                if abs(n) > T:
                    boundary[(a + 1, g + 1, n)] += e
                    continue
                out.mul_atom(a + 1, g + 1, n, e)
    if with_boundary:
        return out, boundary
    return out


class StabilizationError(ArithmeticError):
    pass


def konishi_rhs_stable(mus):
    """Bulk of the right side, checked to agree at L and L+1."""
    L, T = default_bounds(mus)
    r1 = konishi_rhs(mus, L, T)
    r2 = konishi_rhs(mus, L + 1, T)
    if not r1 == r2:
        raise StabilizationError("truncations L=%d and L=%d disagree" % (L, L + 1))
    return r1


def konishi_check(mus):
    """True iff left and stabilized right side agree exactly."""
    return konishi_lhs(mus) == konishi_rhs_stable(mus)


def e_ratio(alpha, gamma):
    """Packed e_alpha / e_gamma."""
    if alpha == gamma:
        return 0
    return var_mono(e_var(alpha)) - var_mono(e_var(gamma))


def sinh_term(mus, m):
    """Prefactor-free sinh-form summand for one fixed point, in e_a and q.

    The twist exp(m beta (|mu^a| a_a + h kappa/2)) is e_a^(-m |mu^a|) q^(-m kappa/2).
    """
    out = konishi_rhs_stable(mus).to_fr(e_ratio)
    if m:
        shift = 0
        for a, mu in enumerate(mus, 1):
            shift += -m * sum(mu) * var_mono(e_var(a))
            shift += var_mono("q", -m * kappa(mu))
        out = out.scale(1, shift)
    return out


def unrefined_substitution():
    """t1 = q, t2 = q^-1 (t1 = e^(-beta h), t2 = e^(beta h), q = e^(-beta h))."""
    return {"t1": (1, mono(q=1)), "t2": (1, mono(q=-1))}


def derive_prefactor(N):
    """Constant c with index = c^k * (sinh form), from the k=1 terms."""
    idx = twisted_index_series(N, 0, 1).substitute(unrefined_substitution()).coefficient(1)
    sf = FR.sum([sinh_term([tuple(p) for p in fp], 0)
                 for fp in enumerate_multipartitions(N, 1)])
    ratio = (idx / sf).to_poly()
    if ratio is None or len(ratio.terms) != 1 or 0 not in ratio.terms:
        raise ArithmeticError("index and sinh form are not proportional by a constant")
    return ratio.terms[0]


CANDIDATE_PREFACTORS = {
    "quarter": lambda N: mpq(1, 4),
    "rank_dependent": lambda N: mpq(1, 2 ** (2 * N)),
}


def sinh_form_series(N, m, Q_cutoff, prefactor=None):
    """Sum over fixed points of (Q c)^k e-/q-twist times the stabilized sinh product."""
    c = derive_prefactor(N) if prefactor is None else mpq(prefactor)
    out = {}
    for k in range(Q_cutoff + 1):
        terms = [sinh_term([tuple(p) for p in fp], m) for fp in enumerate_multipartitions(N, k)]
        out[(k,)] = FR.sum(terms).scale(c ** k)
    return TruncatedSeries(("Q",), (Q_cutoff,), out)
