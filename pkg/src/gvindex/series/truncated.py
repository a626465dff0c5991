"""Truncated multivariate power series with rational-function coefficients.

Grading variables (``Q``, ``p``, ...) carry nonnegative integer exponents and
are truncated independently: a term ``Q**a p**b`` survives iff ``a <= cutoff_Q``
and ``b <= cutoff_p``.  Coefficients are :class:`FactoredRational` in the
remaining (coefficient) variables.
"""

from itertools import product as iproduct

from gmpy2 import mpq

from .rational import FactoredRational, Substitution, ONE
from .monomial import var_index, digits

FR = FactoredRational


class TruncatedSeries:
    __slots__ = ("gvars", "cutoffs", "coeffs")

    def __init__(self, gvars, cutoffs, coeffs=None):
        if isinstance(gvars, str):
            gvars = (gvars,)
        self.gvars = tuple(gvars)
        if isinstance(cutoffs, int):
            cutoffs = (cutoffs,)
        self.cutoffs = tuple(int(c) for c in cutoffs)
        if len(self.cutoffs) != len(self.gvars):
            raise ValueError("one cutoff per grading variable")
        if any(c < 0 for c in self.cutoffs):
            raise ValueError("cutoffs must be nonnegative")
        self.coeffs = {}
        for a, c in (coeffs or {}).items():
            a = tuple(a) if not isinstance(a, int) else (a,)
            if len(a) != len(self.gvars) or any(x < 0 for x in a):
                raise ValueError("bad grading exponent %r" % (a,))
            if not self.within(a):
                continue
            c = c if isinstance(c, FR) else FR._coerce(c)
            if c.num:
                self.coeffs[a] = c

    # -- construction ---------------------------------------------------
    @classmethod
    def one(cls, gvars, cutoffs):
        s = cls(gvars, cutoffs)
        s.coeffs[(0,) * len(s.gvars)] = FR(ONE)
        return s

    @classmethod
    def zero(cls, gvars, cutoffs):
        return cls(gvars, cutoffs)

    def like(self, coeffs=None):
        return TruncatedSeries(self.gvars, self.cutoffs, coeffs)

    def within(self, a):
        return all(x <= c for x, c in zip(a, self.cutoffs))

    def _check(self, other):
        if self.gvars != other.gvars or self.cutoffs != other.cutoffs:
            raise ValueError("series have different gradings or cutoffs")

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = self.like({(0,) * len(self.gvars): FR._coerce(other)})
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out[a] + c if a in out else c
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        return self.like({a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = FR._coerce(other)
            return self.like({a: v * c for a, v in self.coeffs.items()})
        self._check(other)
        acc = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                g = tuple(i + j for i, j in zip(a, b))
                if self.within(g):
                    acc.setdefault(g, []).append(x * y)
        return self.like({g: FR.sum(v) for g, v in acc.items()})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = TruncatedSeries.one(self.gvars, self.cutoffs)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def constant(self):
        return self.coeffs.get((0,) * len(self.gvars), FR(0))

    def inverse(self):
        c0 = self.constant()
        if not c0.num:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        ic = c0.inverse()
        rest = (self - c0) * ic
        # 1/(1+r) = sum (-r)^n, r has no constant term so this terminates
        out = TruncatedSeries.one(self.gvars, self.cutoffs)
        term = out
        for _ in range(sum(self.cutoffs)):
            term = term * (-rest)
            if not term.coeffs:
                break
            out = out + term
        return out * ic

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self * FR._coerce(other).inverse()

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.gvars != other.gvars or self.cutoffs != other.cutoffs:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        zero = FR(0)
        return all(self.coeffs.get(a, zero) == other.coeffs.get(a, zero) for a in keys)

    __hash__ = None

    def mismatches(self, other):
        """Grading exponents where the two series differ."""
        self._check(other)
        zero = FR(0)
        keys = sorted(set(self.coeffs) | set(other.coeffs))
        return [a for a in keys if self.coeffs.get(a, zero) != other.coeffs.get(a, zero)]

    # -- exp / log ------------------------------------------------------
    def _indices(self):
        return sorted(iproduct(*[range(c + 1) for c in self.cutoffs]), key=lambda a: (sum(a), a))

    def exp(self):
        """exp of a series with zero constant term (Euler-operator recurrence)."""
        zero = (0,) * len(self.gvars)
        if zero in self.coeffs:
            raise ValueError("exp needs a zero constant term")
        E = {zero: FR(ONE)}
        terms = [(b, sum(b), c) for b, c in self.coeffs.items()]
        for a in self._indices():
            if a == zero:
                continue
            da = sum(a)
            parts = []
            for b, db, c in terms:
                g = tuple(i - j for i, j in zip(a, b))
                if min(g) < 0:
                    continue
                e = E.get(g)
                if e is not None:
                    parts.append((c * e).scale(mpq(db, da)))
            if parts:
                v = FR.sum(parts)
                if v.num:
                    E[a] = v
        return self.like(E)

    def log(self):
        """log of a series with constant term 1."""
        zero = (0,) * len(self.gvars)
        if self.constant() != 1:
            raise ValueError("log needs constant term 1")
        s = {a: c for a, c in self.coeffs.items() if a != zero}
        L = {}
        for a in self._indices():
            if a == zero:
                continue
            da = sum(a)
            parts = []
            if a in s:
                parts.append(s[a])
            for b, lb in L.items():
                g = tuple(i - j for i, j in zip(a, b))
                if min(g) < 0 or g == zero:
                    continue
                sg = s.get(g)
                if sg is not None:
                    parts.append((lb * sg).scale(mpq(-sum(b), da)))
            if parts:
                v = FR.sum(parts)
                if v.num:
                    L[a] = v
        return self.like(L)

    # -- Adams, plethystic exponential --------------------------------
    def adams(self, k, coefficients=True):
        """psi_k: every grading and (optionally) coefficient exponent times k."""
        out = {}
        for a, c in self.coeffs.items():
            b = tuple(k * x for x in a)
            if self.within(b):
                out[b] = c.adams(k) if coefficients else c
        return self.like(out)

    def plethystic_exp(self):
        zero = (0,) * len(self.gvars)
        if zero in self.coeffs:
            raise ValueError("plethystic exponential needs a zero constant term")
        total = self.zero(self.gvars, self.cutoffs)
        kmax = max(self.cutoffs) if self.cutoffs else 0
        acc = {}
        for k in range(1, kmax + 1):
            for a, c in self.adams(k).coeffs.items():
                acc.setdefault(a, []).append(c.scale(mpq(1, k)))
        total = self.like({a: FR.sum(v) for a, v in acc.items()})
        return total.exp()

    # -- filtering and substitution ------------------------------------
    def roots_of_unity_average(self, var, n):
        """Average of f(w^i x) over n-th roots of unity: keep exponents divisible by n."""
        if var in self.gvars:
            j = self.gvars.index(var)
            return self.like({a: c for a, c in self.coeffs.items() if a[j] % n == 0})
        out = {}
        i = var_index(var)
        for a, c in self.coeffs.items():
            if c.atoms_depend_on(var, sign=-1):
                raise ValueError("cannot filter %s through a denominator factor" % var)
            c = c.expand_numerator()
            num = {k: v for k, v in c.num.items()
                   if digits(k).get(i, 0) % (2 * n) == 0}
            if num:
                out[a] = FR(num, c.fac)
        return self.like(out)

    def filter_contract(self, var, l):
        """Keep terms whose ``var`` exponent is divisible by l and divide it by l.

        Realizes the root-of-unity average combined with ``var -> var**(1/l)``.
        """
        j = self.gvars.index(var)
        cut = list(self.cutoffs)
        out = {}
        for a, c in self.coeffs.items():
            if a[j] % l == 0:
                b = list(a)
                b[j] //= l
                out[tuple(b)] = c
        return TruncatedSeries(self.gvars, cut, out)

    def substitute(self, mapping):
        """Simultaneous coefficient substitution ``{name: (c, key)}``."""
        sub = Substitution(mapping)
        return self.like({a: sub(c) for a, c in self.coeffs.items()})

    def map_coeffs(self, f):
        return self.like({a: f(c) for a, c in self.coeffs.items()})

    def scale_grading(self, var, factor):
        """``var -> factor * var`` for a grading variable (factor an FR)."""
        j = self.gvars.index(var)
        factor = FR._coerce(factor)
        out = {}
        for a, c in self.coeffs.items():
            out[a] = c * factor ** a[j]
        return self.like(out)

    def truncate(self, cutoffs):
        if isinstance(cutoffs, int):
            cutoffs = (cutoffs,)
        return TruncatedSeries(self.gvars, cutoffs,
                               {a: c for a, c in self.coeffs.items()
                                if all(x <= k for x, k in zip(a, cutoffs))})

    def restrict(self, var, value=0):
        """Set a grading variable to zero (keep exponent-0 terms) and drop it."""
        j = self.gvars.index(var)
        gv = self.gvars[:j] + self.gvars[j + 1:]
        cut = self.cutoffs[:j] + self.cutoffs[j + 1:]
        return TruncatedSeries(gv, cut, {a[:j] + a[j + 1:]: c for a, c in self.coeffs.items()
                                         if a[j] == value})

    # -- access ---------------------------------------------------------
    def coefficient(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        if isinstance(exps, dict):
            exps = tuple(exps.get(v, 0) for v in self.gvars)
        exps = tuple(exps)
        if len(exps) != len(self.gvars) or not self.within(exps) or min(exps) < 0:
            raise ValueError("grading exponent %r outside cutoffs %r" % (exps, self.cutoffs))
        return self.coeffs.get(exps, FR(0))

    def __getitem__(self, exps):
        return self.coefficient(exps)

    def __repr__(self):
        body = ", ".join("%s: %s" % (a, c) for a, c in sorted(self.coeffs.items()))
        return "TruncatedSeries(%s<=%s; %s)" % (self.gvars, self.cutoffs, body)


def series(gvars, cutoffs, coeffs=None):
    return TruncatedSeries(gvars, cutoffs, coeffs)


def from_fr(fr, gvars, cutoffs):
    """Constant series with coefficient ``fr``."""
    s = TruncatedSeries(gvars, cutoffs)
    s.coeffs[(0,) * len(s.gvars)] = FR._coerce(fr)
    return s
