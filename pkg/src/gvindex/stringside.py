"""Closed forms from the string side.

Schur functions at the principal specialization (W_mu), the conifold
partition function in its Schur, hook and plethystic forms, and the
normalized partition functions of the 5D, 6D and rank-N geometries.
"""

from functools import lru_cache

from gmpy2 import mpq

from .partitions import (Partition, enumerate_partitions, enumerate_multipartitions, transpose,
                         hooks, kappa, n_of)
from .series import FR, TruncatedSeries, Substitution, mono, var_mono, ONE
from .instanton import konishi_rhs_stable, _binom_pseries, _pmul

Qv = var_mono("q")
QM = var_mono("Qm")


class SymFuncContext:
    """Power sums p_1..p_bound of one alphabet and the derived h_k, e_k."""

    def __init__(self, power_sum, bound):
        self.bound = bound
        self.p = [None] + [FR._coerce(power_sum(n)) for n in range(1, bound + 1)]
        h = [FR(ONE)]
        e = [FR(ONE)]
        for k in range(1, bound + 1):
            # Newton: k h_k = sum p_i h_{k-i}, k e_k = sum (-1)^(i-1) p_i e_{k-i}
            h.append(FR.sum([self.p[i] * h[k - i] for i in range(1, k + 1)]).scale(mpq(1, k)))
            e.append(FR.sum([(self.p[i] * e[k - i]).scale((-1) ** (i - 1))
                             for i in range(1, k + 1)]).scale(mpq(1, k)))
        self.h = h
        self.e = e
        self._schur = {}

    def h_at(self, k):
        if k < 0:
            return FR(0)
        if k > self.bound:
            raise ValueError("degree %d beyond the power-sum bound %d" % (k, self.bound))
        return self.h[k]


def principal_context(bound, var="q"):
    """p_n = 1/(1 - var^n)."""
    v = var_mono(var)
    return SymFuncContext(lambda n: FR.binomial(n * v, 1, -1), bound)


def _det(mat):
    """Laplace expansion along the first row with memoized minors."""
    n = len(mat)
    memo = {}

    def minor(row, cols):
        if row == n:
            return FR(ONE)
        hit = memo.get((row, cols))
        if hit is not None:
            return hit
        terms = []
        sign = 1
        for idx, c in enumerate(cols):
            a = mat[row][c]
            if a.num:
                rest = cols[:idx] + cols[idx + 1:]
                terms.append((a * minor(row + 1, rest)).scale(sign))
            sign = -sign
        v = FR.sum(terms)
        memo[(row, cols)] = v
        return v

    return minor(0, tuple(range(n)))


def schur_at(ctx, mu):
    """s_mu = det(h_{mu_i - i + j}) in the alphabet of ``ctx``."""
    mu = Partition(mu)
    if sum(mu) > ctx.bound:
        raise ValueError("|mu| = %d exceeds the power-sum bound %d" % (sum(mu), ctx.bound))
    hit = ctx._schur.get(mu)
    if hit is not None:
        return hit
    n = len(mu)
    if n == 0:
        v = FR(ONE)
    else:
        v = _det([[ctx.h_at(mu[i] - i + j) for j in range(n)] for i in range(n)])
    ctx._schur[mu] = v
    return v


def invert_var(fr, var="q"):
    return Substitution({var: (1, mono({var: -1}))})(fr)


def w_hook(mu):
    """q^{n(mu)} / prod (1 - q^h), the hook-content form of s_mu(1, q, q^2, ...)."""
    out = FR.monomial(n_of(mu) * Qv)
    for h in hooks(mu):
        out = out * FR.binomial(h * Qv, 1, -1)
    return out


def w_symmetric_hook(mu):
    """q^{kappa/4} prod 1/(q^{h/2} - q^{-h/2})."""
    out = FR.monomial(var_mono("q", kappa(mu) // 2))
    for h in hooks(mu):
        # 1/(q^{h/2} - q^{-h/2}) = -q^{h/2} / (1 - q^h)
        out = out * FR.binomial(h * Qv, 1, -1).scale(-1, var_mono("q", h))
    return out


def hook_relation(mu):
    """W_mu / symmetric-hook form; (-1)^{|mu|} q^{-(kappa + |mu|)/2}."""
    return FR.monomial(var_mono("q", -(kappa(mu) + sum(mu))), (-1) ** sum(mu))


# -- conifold ---------------------------------------------------------------

CONIFOLD_FORMS = ("schur", "dual", "hook", "pe")


def conifold_Z(Q_cutoff, form="schur"):
    """sum_mu Q^{|mu|} W_mu(q) W_mu(q^-1) and its equivalent forms.

    ``dual`` is sum (-Q)^{|mu|} W_mu(q) W_{mu^t}(q) with W taken in the
    alphabet q^(i - 1/2); ``hook`` is
    sum Q^{|mu|} prod 1/((1-q^h)(1-q^-h)); ``pe`` is PE[Q/((1-q)(1-q^-1))].
    """
    out = {}
    if form == "pe":
        s = TruncatedSeries(("Q",), (Q_cutoff,),
                            {(1,): FR.binomial(Qv, 1, -1) * FR.binomial(-Qv, 1, -1)})
        return s.plethystic_exp()
    ctx = principal_context(Q_cutoff) if form in ("schur", "dual") else None
    for k in range(Q_cutoff + 1):
        terms = []
        for mu in enumerate_partitions(k):
            if form == "schur":
                w = schur_at(ctx, mu)
                terms.append(w * invert_var(w))
            elif form == "dual":
                # this form needs the symmetric alphabet q^(i - 1/2), which
                # multiplies each W by q^(|mu|/2)
                terms.append((schur_at(ctx, mu) * schur_at(ctx, transpose(mu)))
                             .scale((-1) ** k, k * Qv))
            elif form == "hook":
                t = FR(ONE)
                for h in hooks(mu):
                    t = t * FR.binomial(h * Qv, 1, -1) * FR.binomial(-h * Qv, 1, -1)
                terms.append(t)
            else:
                raise ValueError("unknown conifold form %r" % form)
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (Q_cutoff,), out)


def cauchy_sum(ctx_x, ctx_y, cutoff, dual=False):
    out = {}
    for k in range(cutoff + 1):
        terms = []
        for mu in enumerate_partitions(k):
            nu = transpose(mu) if dual else mu
            terms.append(schur_at(ctx_x, mu) * schur_at(ctx_y, nu))
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (cutoff,), out)


def cauchy_closed(ctx_x, ctx_y, cutoff, sign=1):
    """exp sum_n sign^(n-1) p_n(x) p_n(y) Q^n / n.

    sign = 1 is prod 1/(1 - x_i y_j Q); sign = -1 is prod (1 + x_i y_j Q).
    """
    terms = {(n,): (ctx_x.p[n] * ctx_y.p[n]).scale(mpq(sign ** (n - 1), n))
             for n in range(1, cutoff + 1)}
    return TruncatedSeries(("Q",), (cutoff,), terms).exp()


def _default_contexts(cutoff):
    return (SymFuncContext(lambda n: FR.binomial(n * var_mono("t1"), 1, -1), cutoff),
            SymFuncContext(lambda n: FR.binomial(n * var_mono("t2"), 1, -1), cutoff))


def two_variable_cauchy_check(cutoff, ctx_x=None, ctx_y=None):
    """sum Q^{|mu|} s_mu(x) s_mu(y) against exp sum p_n(x) p_n(y) Q^n / n."""
    if ctx_x is None:
        ctx_x, ctx_y = _default_contexts(cutoff)
    return cauchy_sum(ctx_x, ctx_y, cutoff) == cauchy_closed(ctx_x, ctx_y, cutoff)


def dual_cauchy_orientation(cutoff, ctx_x=None, ctx_y=None):
    """Which closed form the sum s_mu(x) s_{mu^t}(y) Q^{|mu|} matches.

    Returns "numerator" for prod (1 + x_i y_j Q), "denominator" for
    1/prod(1 + x_i y_j Q), or None.
    """
    if ctx_x is None:
        ctx_x, ctx_y = _default_contexts(cutoff)
    lhs = cauchy_sum(ctx_x, ctx_y, cutoff, dual=True)
    if lhs == cauchy_closed(ctx_x, ctx_y, cutoff, sign=-1):
        return "numerator"
    inv = cauchy_closed(ctx_x, ctx_y, cutoff, sign=-1).inverse()
    if lhs == inv:
        return "denominator"
    return None


# -- 5D and 6D --------------------------------------------------------------

def _cell_5d(h):
    return (FR.binomial(QM + h * Qv, 1, 1) * FR.binomial(QM - h * Qv, 1, 1)
            * FR.binomial(h * Qv, 1, -1) * FR.binomial(-h * Qv, 1, -1))


def zhat_5d(Q_cutoff):
    out = {}
    for k in range(Q_cutoff + 1):
        terms = []
        for mu in enumerate_partitions(k):
            t = FR(ONE)
            for h in hooks(mu):
                t = t * _cell_5d(h)
            terms.append(t)
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (Q_cutoff,), out)


@lru_cache(maxsize=None)
def _cell_6d_series(h, Pc):
    """prod_{k<=Pc} of the Q_rho factors for one cell, as {a: poly}."""
    cur = {0: {0: ONE}}
    for k in range(1, Pc + 1):
        for key, e in ((QM + h * Qv, 1), (QM - h * Qv, 1), (-QM + h * Qv, 1),
                       (-QM - h * Qv, 1), (h * Qv, -2), (-h * Qv, -2)):
            cur = _pmul(cur, _binom_pseries(key, k, e, Pc), Pc)
    return cur


def zhat_6d(Q_cutoff, Qrho_cutoff):
    """Hook-product form with the Q_rho factors; graded by Q and p = Q_rho."""
    Pc = Qrho_cutoff
    out = {}
    for k in range(Q_cutoff + 1):
        acc = {}
        for mu in enumerate_partitions(k):
            base = FR(ONE)
            ser = {0: {0: ONE}}
            for h in hooks(mu):
                base = base * _cell_5d(h)
                ser = _pmul(ser, _cell_6d_series(h, Pc), Pc)
            for a, poly in ser.items():
                acc.setdefault(a, []).append(base * FR(poly))
        for a, v in acc.items():
            out[(k, a)] = FR.sum(v)
    return TruncatedSeries(("Q", "p"), (Q_cutoff, Pc), out)


# -- rank N -----------------------------------------------------------------

def qf_var(i):
    return "QF%d" % i


def qf_ratio(alpha, gamma):
    """e_alpha / e_gamma = prod_{alpha <= i < gamma} Q_{F_i} for alpha < gamma."""
    if alpha == gamma:
        return 0
    lo, hi = min(alpha, gamma), max(alpha, gamma)
    key = sum(var_mono(qf_var(i)) for i in range(lo, hi))
    return key if alpha < gamma else -key


def split_points(N, m):
    """(K1, K2) = (floor((N+m-1)/2), floor((N+m+1)/2))."""
    return (N + m - 1) // 2, (N + m + 1) // 2


def framing_monomial(mus, m):
    """prod_{i<=K1} Q_{F_i}^{S_i} prod_{i>=K2} Q_{F_i}^{-S'_i} with partial sizes S, S'."""
    N = len(mus)
    K1, K2 = split_points(N, m)
    sizes = [sum(mu) for mu in mus]
    key = 0
    for i in range(1, K1 + 1):
        if i <= N - 1:
            key += sum(sizes[:i]) * var_mono(qf_var(i))
    for i in range(K2, N):
        key -= sum(sizes[i:]) * var_mono(qf_var(i))
    return key


def _rank_term(mus, m, N, form):
    k = sum(sum(mu) for mu in mus)
    sinh = konishi_rhs_stable(mus).to_fr(qf_ratio)
    kap = sum(kappa(mu) for mu in mus)
    if N == 2 and form == "thm7.1":
        # ((-1)^m 2^-4)^k Q_F^{m |mu^2|} q^{-m kappa / 2}
        shift = m * sum(mus[1]) * var_mono("QF1") + var_mono("q", -m * kap)
        return sinh.scale(mpq((-1) ** (m * k), 2 ** (4 * k)), shift)
    c = mpq(1, 2 ** (2 * N * k))
    shift = m * framing_monomial(mus, m) + var_mono("q", m * kap)
    if form == "unsplit":
        c = c * (-1) ** (m * k)
    elif form != "split":
        raise ValueError("unknown rank-N form %r" % form)
    return sinh.scale(c, shift)


def zhat_rank(N, m, Q_cutoff, form=None):
    """String-side normalized partition function in the collected variable Q.

    N = 2 uses the F_m display with Q = Q_B/Q_F; N > 2 uses the display split
    into m-independent and m-dependent parts, with Q collected as
    (-1)^N Q_B prod Q_{F_i}^(...).  ``form="unsplit"`` keeps the display
    before splitting, which carries an extra (-1)^(mk).
    """
    if form is None:
        form = "thm7.1" if N == 2 else "split"
    out = {}
    for k in range(Q_cutoff + 1):
        terms = [_rank_term([Partition(p) for p in mp], m, N, form)
                 for mp in enumerate_multipartitions(N, k)]
        out[(k,)] = FR.sum(terms)
    return TruncatedSeries(("Q",), (Q_cutoff,), out)


def thm71_substitution():
    """t1 = q, t2 = q^-1, e_1 = -1, e_2 = -Q_F^-1."""
    return {"t1": (1, Qv), "t2": (1, -Qv),
            "e1": (-1, 0), "e2": (-1, -var_mono("QF1"))}


def rank_substitution(N, m, unit=None):
    """t1 = q, t2 = q^-1 and e_alpha from e_alpha / e_{alpha+1} = Q_{F_alpha}.

    ``unit`` is the index alpha with e_alpha = 1; by default K1 + 1.
    """
    K1, _ = split_points(N, m)
    u = K1 + 1 if unit is None else unit
    sub = {"t1": (1, Qv), "t2": (1, -Qv)}
    for a in range(1, N + 1):
        if a < u:
            key = sum(var_mono(qf_var(i)) for i in range(a, u))
        else:
            key = -sum(var_mono(qf_var(i)) for i in range(u, a))
        sub["e%d" % a] = (1, key)
    return sub
