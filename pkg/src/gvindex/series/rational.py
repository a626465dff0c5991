"""Laurent polynomials and factored rational functions.

``FactoredRational`` stores ``num * prod(atom**e)`` where ``num`` is a sparse
Laurent polynomial and each atom is a *normalized* polynomial: its smallest
term (in packed-key order) is the constant 1.  Two-term atoms are the
binomials ``1 - c*m`` with ``m > 0`` that every localization formula is made
of; longer atoms only appear when dividing by an arbitrary polynomial.
Exponents ``e`` may be positive (kept factored in the numerator) or negative
(denominator).  No gcd is ever computed: sums use the multiset union of the
denominators and then cancel by exact division.
"""

from fractions import Fraction

import gmpy2
from gmpy2 import mpq

from . import kernel
from .monomial import (REGISTRY, SHIFT, digits, var_index, mono_str, leading_index,
                       to_dict, mono_doubled)

ONE = mpq(1)
ZERO = mpq(0)


class SingularSpecialization(ZeroDivisionError):
    """A denominator factor was sent to zero by a substitution."""


def Q(x):
    """Coerce to ``mpq``."""
    if isinstance(x, type(ONE)):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _poly_pow(p, n):
    out = {0: ONE}
    base = p
    while n:
        if n & 1:
            out = kernel.mul(out, base)
        n >>= 1
        if n:
            base = kernel.mul(base, base)
    return out


def normalize_poly(p):
    """Split a nonzero polynomial as ``c * x**k * atom``.

    Returns ``(c, k, atom)`` where ``atom`` is a tuple of ``(key, coeff)``
    pairs sorted by key starting with ``(0, 1)``, or ``None`` for a monomial.
    """
    k0 = min(p)
    c0 = p[k0]
    if len(p) == 1:
        return c0, k0, None
    inv = ONE / c0
    atom = tuple(sorted((k - k0, v * inv) for k, v in p.items()))
    return c0, k0, atom


def atom_poly(atom):
    return dict(atom)


def _mul_atom(p, atom, e):
    """``p * atom**e`` for ``e >= 0``."""
    if e == 0:
        return p
    if len(atom) == 2:
        m, v = atom[1]
        return kernel.mul_binomial(p, -v, m, e)
    return kernel.mul(p, _poly_pow(dict(atom), e))


def _poly_divide(p, d):
    """Exact quotient of Laurent polynomials or ``None``."""
    if not p:
        return {}
    dmax = max(d)
    cmax = d[dmax]
    if len(d) == 1:
        inv = ONE / cmax
        return {k - dmax: v * inv for k, v in p.items()}
    # per-variable exponent windows the quotient must live in
    dd = [digits(k) for k in d]
    pd = [digits(k) for k in p]
    idx = set()
    for x in dd + pd:
        idx.update(x)
    lo = {}
    hi = {}
    for i in idx:
        dl = min(x.get(i, 0) for x in dd)
        dh = max(x.get(i, 0) for x in dd)
        pl = min(x.get(i, 0) for x in pd)
        ph = max(x.get(i, 0) for x in pd)
        lo[i] = pl - dl
        hi[i] = ph - dh
        if lo[i] > hi[i]:
            return None
    rem = dict(p)
    quot = {}
    inv = ONE / cmax
    dterms = list(d.items())
    while rem:
        k = max(rem)
        t = k - dmax
        qd = digits(t)
        for i in idx:
            e = qd.get(i, 0)
            if e < lo[i] or e > hi[i]:
                return None
        if any(i not in idx for i in qd):
            return None
        c = rem[k] * inv
        quot[t] = c
        for kd, vd in dterms:
            kk = kd + t
            w = rem.get(kk, ZERO) - c * vd
            if w:
                rem[kk] = w
            else:
                rem.pop(kk, None)
    return quot


def divide_atom(p, atom):
    if len(atom) == 2:
        m, v = atom[1]
        return kernel.div_binomial(p, -v, m, leading_index(m))
    return _poly_divide(p, dict(atom))


class LaurentPoly:
    """Sparse exact Laurent polynomial; a thin wrapper over a dict."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, LaurentPoly):
            terms = terms.terms
        self.terms = {k: Q(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, key, c=1):
        return cls({key: c})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly({0: other})

    def __add__(self, other):
        return LaurentPoly(kernel.add(self.terms, self._coerce(other).terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return LaurentPoly(kernel.add(self.terms, self._coerce(other).terms, -1))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return LaurentPoly(kernel.mul(self.terms, self._coerce(other).terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return LaurentPoly(_poly_pow(self.terms, n))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other}) if other is not None else None
            if other is None:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, key):
        return self.terms.get(key, ZERO)

    def adams(self, k):
        return LaurentPoly({key * k: v for key, v in self.terms.items()})

    def degree_range(self, name):
        i = var_index(name)
        ds = [digits(k).get(i, 0) for k in self.terms]
        return (min(ds), max(ds)) if ds else (0, 0)

    def __repr__(self):
        return "LaurentPoly(%s)" % poly_str(self.terms)


def poly_str(p):
    if not p:
        return "0"
    out = []
    for k in sorted(p):
        v = p[k]
        m = mono_str(k)
        if m == "1":
            out.append(str(v))
        elif v == 1:
            out.append(m)
        elif v == -1:
            out.append("-" + m)
        else:
            out.append("%s*%s" % (v, m))
    return " + ".join(out).replace("+ -", "- ")


class FactoredRational:
    """``num * prod(atom**e)``, an element of the rational function field."""

    __slots__ = ("num", "fac")

    def __init__(self, num=None, fac=None):
        if isinstance(num, FactoredRational):
            self.num, self.fac = num.num, num.fac
            return
        if isinstance(num, LaurentPoly):
            num = num.terms
        elif num is None:
            num = {}
        elif not isinstance(num, dict):
            c = Q(num)
            num = {0: c} if c else {}
        self.num = num
        self.fac = {a: e for a, e in (fac or {}).items() if e} if num else {}

    # -- constructors ---------------------------------------------------
    @classmethod
    def const(cls, c):
        return cls(c)

    @classmethod
    def monomial(cls, key, c=1):
        c = Q(c)
        return cls({key: c} if c else {})

    @classmethod
    def from_poly(cls, p):
        p = p.terms if isinstance(p, LaurentPoly) else p
        return cls({k: Q(v) for k, v in p.items() if v})

    @classmethod
    def binomial(cls, m, c=1, e=1):
        """``(1 - c*x**m)**e``; ``m`` is a packed monomial, ``e`` any integer."""
        c = Q(c)
        if not c:
            return cls(ONE)
        if m == 0:
            v = ONE - c
            if not v:
                if e < 0:
                    raise ZeroDivisionError("factor 1 - 1 in denominator")
                return cls(ZERO)
            return cls(v ** e if e >= 0 else ONE / v ** (-e))
        if m > 0:
            return cls({0: ONE}, {((0, ONE), (m, -c)): e})
        # 1 - c x^m = -c x^m (1 - c^-1 x^-m)
        lead = -c
        ci = ONE / c
        if e >= 0:
            k = lead ** e
        else:
            k = ONE / lead ** (-e)
        return cls({m * e: k}, {((0, ONE), (-m, -ci)): e})

    @classmethod
    def factor_of(cls, p, e=1):
        """``p**e`` for a polynomial ``p``, keeping ``p`` as an atom."""
        p = p.terms if isinstance(p, LaurentPoly) else p
        if not p:
            if e < 0:
                raise ZeroDivisionError("division by zero polynomial")
            return cls(ZERO)
        c, k, atom = normalize_poly(p)
        if e >= 0:
            num = {k * e: c ** e}
        else:
            num = {k * e: ONE / c ** (-e)}
        return cls(num, {atom: e} if atom else None)

    # -- predicates -----------------------------------------------------
    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def denominator_atoms(self):
        return {a: -e for a, e in self.fac.items() if e < 0}

    def is_polynomial(self):
        return all(e > 0 for e in self.fac.values())

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, FactoredRational):
            return x
        if isinstance(x, LaurentPoly):
            return FactoredRational(x.terms)
        return FactoredRational(x)

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.num or not other.num:
            return FactoredRational(ZERO)
        fac = dict(self.fac)
        for a, e in other.fac.items():
            v = fac.get(a, 0) + e
            if v:
                fac[a] = v
            else:
                del fac[a]
        if len(other.num) == 1 and 0 in other.num:
            c = other.num[0]
            num = self.num if c == 1 else {k: v * c for k, v in self.num.items()}
        elif len(self.num) == 1 and 0 in self.num:
            c = self.num[0]
            num = other.num if c == 1 else {k: v * c for k, v in other.num.items()}
        else:
            num = kernel.mul(self.num, other.num)
        return FactoredRational(num, fac)

    __rmul__ = __mul__

    def scale(self, c, shift=0):
        c = Q(c)
        return FactoredRational(kernel.scale_shift(self.num, c, shift), self.fac)

    def __neg__(self):
        return FactoredRational({k: -v for k, v in self.num.items()}, self.fac)

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        c, k, atom = normalize_poly(self.num)
        fac = {a: -e for a, e in self.fac.items()}
        if atom is not None:
            fac[atom] = fac.get(atom, 0) - 1
        return FactoredRational({-k: ONE / c}, fac)

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return FactoredRational(ONE)
        return FactoredRational(_poly_pow(self.num, n), {a: e * n for a, e in self.fac.items()})

    def __add__(self, other):
        return FactoredRational.sum([self, self._coerce(other)])

    __radd__ = __add__

    def __sub__(self, other):
        return FactoredRational.sum([self, -self._coerce(other)])

    def __rsub__(self, other):
        return FactoredRational.sum([self._coerce(other), -self])

    @staticmethod
    def sum(items):
        """Sum with one common denominator and a single cancellation pass."""
        items = [x if isinstance(x, FactoredRational) else FactoredRational._coerce(x)
                 for x in items]
        items = [x for x in items if x.num]
        if not items:
            return FactoredRational(ZERO)
        if len(items) == 1:
            return items[0]
        common = dict(items[0].fac)
        for x in items[1:]:
            for a in set(common) | set(x.fac):
                e = min(common.get(a, 0), x.fac.get(a, 0))
                if e:
                    common[a] = e
                else:
                    common.pop(a, None)
        total = {}
        for x in items:
            p = x.num
            for a, e in x.fac.items():
                r = e - common.get(a, 0)
                if r:
                    p = _mul_atom(p, a, r)
            for a, e in common.items():
                if a not in x.fac:
                    p = _mul_atom(p, a, -e)
            total = kernel.add(total, p) if total else dict(p)
        res = FactoredRational(total, common)
        return res.cancel()

    def cancel(self):
        """Divide denominator atoms into the numerator where exact."""
        if not self.num:
            return FactoredRational(ZERO)
        num = self.num
        fac = dict(self.fac)
        for a in sorted((a for a, e in fac.items() if e < 0), key=_atom_sort_key):
            e = fac[a]
            while e < 0:
                qt = divide_atom(num, a)
                if qt is None:
                    break
                num = qt
                e += 1
            if e:
                fac[a] = e
            else:
                del fac[a]
        return FactoredRational(num, fac)

    def expand_numerator(self):
        """Multiply the positive atoms out into the numerator polynomial."""
        num = self.num
        fac = {}
        for a, e in self.fac.items():
            if e > 0:
                num = _mul_atom(num, a, e)
            else:
                fac[a] = e
        return FactoredRational(num, fac)

    def canonical(self):
        """A normal form: equal functions give identical ``str``.

        Binomial atoms ``1 - x**k`` and ``1 + x**k`` are split into cyclotomic
        factors of the primitive monomial, positive atoms are multiplied out and
        every denominator factor is divided into the numerator where exact.
        Other atoms are kept as they are.
        """
        return self._canonical()[0]

    def _canonical(self):
        if not self.num:
            return FactoredRational(ZERO), {}
        num = self.num
        fac = {}
        tags = {}
        for a, e in self.fac.items():
            for b, tag in _split_atom(a):
                fac[b] = fac.get(b, 0) + e
                tags[b] = tag
        for a, e in list(fac.items()):
            if e > 0:
                num = _mul_atom(num, a, e)
                del fac[a]
            elif not e:
                del fac[a]
        out = FactoredRational(num, fac).cancel()
        return out, {a: tags[a] for a in out.fac}

    def binomial_form(self):
        """``(num, [(m, e), ...], rest)`` with the function equal to
        ``num / prod (1 - x**m)**e * rest``.

        Built from the canonical form, so it is itself canonical: cyclotomic
        factors of each primitive monomial are regrouped greedily into
        ``1 - x**(d m0)`` starting from the largest ``d``; the surplus factors
        this introduces go to the numerator.  ``rest`` collects atoms that are
        not cyclotomic (as a factored rational, usually 1).
        """
        c, tags = self._canonical()
        num = c.num
        rest = {}
        need = {}
        for a, e in c.fac.items():
            tag = tags[a]
            if tag is None:
                rest[a] = e
            else:
                need.setdefault(tag[0], {})[tag[1]] = -e
        den = []
        for m0 in sorted(need):
            ds = need[m0]
            while any(v > 0 for v in ds.values()):
                D = max(d for d, v in ds.items() if v > 0)
                k = ds[D]
                den.append((D * m0, k))
                for d in range(1, D + 1):
                    if D % d == 0:
                        ds[d] = ds.get(d, 0) - k
            for d in sorted(ds):
                if ds[d] < 0:
                    num = _mul_atom(num, _cyclotomic_atom(d, m0), -ds[d])
        den.sort()
        return num, den, FactoredRational(ONE, rest)

    def to_poly(self):
        """The Laurent polynomial this equals, or ``None`` if not one."""
        x = self.expand_numerator().cancel()
        if any(e < 0 for e in x.fac.values()):
            return None
        return LaurentPoly(x.num)

    def __eq__(self, other):
        if other is None:
            return False
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.fac == other.fac:
            return self.num == other.num or not (self - other).num
        return not (self - other).num

    __hash__ = None

    # -- maps -----------------------------------------------------------
    def adams(self, k):
        """Substitute every variable ``x -> x**k`` (constants fixed)."""
        if k == 1:
            return self
        fac = {}
        for a, e in self.fac.items():
            b = tuple((m * k, v) for m, v in a)
            fac[b] = fac.get(b, 0) + e
        return FactoredRational({m * k: v for m, v in self.num.items()}, fac)

    def substitute(self, mapping):
        """Simultaneous substitution ``var -> c * monomial``.

        ``mapping`` maps variable names to ``(c, key)`` pairs.  Raises
        :class:`SingularSpecialization` if a denominator factor vanishes.
        """
        sub = Substitution(mapping)
        return sub(self)

    def variables(self):
        out = set()
        for k in self.num:
            out |= set(to_dict(k))
        for a in self.fac:
            for k, _ in a:
                out |= set(to_dict(k))
        return out

    def depends_on(self, name):
        i = REGISTRY.index.get(name)
        if i is None:
            return False
        for k in self.num:
            if digits(k).get(i):
                return True
        return self.atoms_depend_on(name)

    def atoms_depend_on(self, name, sign=None):
        i = REGISTRY.index.get(name)
        if i is None:
            return False
        for a, e in self.fac.items():
            if sign is not None and (e > 0) != (sign > 0):
                continue
            for k, _ in a:
                if digits(k).get(i):
                    return True
        return False

    def __repr__(self):
        return "FactoredRational(%s)" % self

    def __str__(self):
        s = poly_str(self.num)
        nums = []
        dens = []
        for a in sorted(self.fac, key=_atom_sort_key):
            e = self.fac[a]
            t = "(%s)" % poly_str(dict(a))
            if abs(e) != 1:
                t += "^%d" % abs(e)
            (nums if e > 0 else dens).append(t)
        if nums:
            s = "(%s)*%s" % (s, "*".join(nums))
        if dens:
            s = "(%s)/(%s)" % (s, "*".join(dens))
        return s


def _cyclotomic(n, _cache={1: {0: -1, 1: 1}}):
    """Integer coefficients of the n-th cyclotomic polynomial, by degree."""
    if n not in _cache:
        p = {0: -1, n: 1}
        for d in range(1, n):
            if n % d == 0:
                p = _int_divide(p, _cyclotomic(d))
        _cache[n] = p
    return _cache[n]


def _int_divide(p, d):
    p = dict(p)
    q = {}
    top = max(d)
    while p:
        k = max(p)
        c = p.pop(k)
        if not c:
            continue
        t = k - top
        q[t] = c // d[top]
        for j, v in d.items():
            if j != top:
                p[j + t] = p.get(j + t, 0) - q[t] * v
        p = {a: b for a, b in p.items() if b}
    return q


def _cyclotomic_atom(d, m0):
    phi = {0: 1, 1: -1} if d == 1 else _cyclotomic(d)
    return tuple(sorted((j * m0, mpq(c)) for j, c in phi.items()))


def _split_atom(atom):
    """``atom`` as cyclotomic atoms ``Phi_d(m0)``, tagged ``(m0, d)``."""
    if len(atom) != 2:
        return [(atom, None)]
    m, v = atom[1]
    if v not in (1, -1):
        return [(atom, None)]
    g = 0
    for x in digits(m).values():
        g = gmpy2.gcd(g, x)
    g = int(g)
    if g % 2 == 0:
        # digits are doubled exponents; stay with integral monomials
        g //= 2
    m0 = m // g
    if v == -1:
        # 1 - x^g = prod_{d | g} Phi_d(x), up to the sign of Phi_1
        ds = [d for d in range(1, g + 1) if g % d == 0]
    else:
        # 1 + x^g = (1 - x^2g) / (1 - x^g)
        ds = [d for d in range(1, 2 * g + 1) if (2 * g) % d == 0 and g % d]
    return [(_cyclotomic_atom(d, m0), (m0, d)) for d in ds]


def _atom_sort_key(a):
    return (len(a), tuple((m, (v.numerator, v.denominator)) for m, v in a))


def _rational_sqrt(c):
    c = Q(c)
    n, d = c.numerator, c.denominator
    if n < 0 or not gmpy2.is_square(n) or not gmpy2.is_square(d):
        return None
    return mpq(gmpy2.isqrt(n), gmpy2.isqrt(d))


class Substitution:
    """Compiled simultaneous substitution ``{var: (c, key)}``."""

    def __init__(self, mapping):
        self.items = []
        for name, target in mapping.items():
            if isinstance(target, tuple):
                c, key = target
            else:
                c, key = 1, target
            c = Q(c)
            if not c:
                raise ValueError("substituting zero for %s" % name)
            self.items.append((var_index(name), c, key))
        self._cache = {}

    def term(self, k):
        """Image of the monomial ``k`` as ``(coefficient, key)``."""
        hit = self._cache.get(k)
        if hit is not None:
            return hit
        ds = digits(k)
        new = k
        acc = 0
        const = ONE
        neg2 = 0
        for i, c, key in self.items:
            d = ds.get(i, 0)
            if not d:
                continue
            new -= d << (SHIFT * i)
            acc += d * key
            if c < 0:
                neg2 += d
                c = -c
            if c != 1:
                if d % 2:
                    r = _rational_sqrt(c)
                    if r is None:
                        raise ValueError("%s has no rational square root" % c)
                    const *= r ** d if d > 0 else ONE / r ** (-d)
                else:
                    h = d // 2
                    const *= c ** h if h > 0 else ONE / c ** (-h)
        if neg2 % 4 not in (0,):
            if neg2 % 2:
                raise ValueError("substitution leaves a square root of -1")
            const = -const
        half = {}
        for i, d in digits(acc).items():
            if d % 2:
                raise ValueError("substitution leaves the half-integer lattice")
            half[i] = d // 2
        new += mono_doubled({REGISTRY.names[i]: d for i, d in half.items()})
        res = (const, new)
        self._cache[k] = res
        return res

    def poly(self, p):
        out = {}
        for k, v in p.items():
            c, key = self.term(k)
            w = out.get(key, ZERO) + c * v
            if w:
                out[key] = w
            else:
                out.pop(key, None)
        return out

    def __call__(self, f):
        num = self.poly(f.num)
        if not num:
            return FactoredRational(ZERO)
        res = FactoredRational(num)
        for a, e in f.fac.items():
            p = self.poly(dict(a))
            if not p:
                if e < 0:
                    raise SingularSpecialization("denominator factor %s -> 0" % poly_str(dict(a)))
                return FactoredRational(ZERO)
            res = res * FactoredRational.factor_of(p, e)
        return res
