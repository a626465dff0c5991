"""Variable registry and packed monomials.

A monomial is stored as a single Python ``int``.  Each registered variable
owns a 32-bit "digit" of a balanced base-2**32 expansion, and the digit holds
the *doubled* exponent, so ``q**(1/2)`` is the digit value 1.  With this
packing

* monomial multiplication is integer addition,
* the inverse monomial is negation,
* the Adams operation ``m -> m**k`` is multiplication by ``k``,
* the sign of the packed integer equals the sign of the exponent of the
  highest-index variable that occurs.  That gives a total order compatible
  with multiplication, and "positive" monomials are simply ``key > 0``.

The registry is process-global.  The variables used by this package are
registered up front in a fixed order so that normal forms (and therefore
serialized output) do not depend on the order in which code paths run.
"""

from fractions import Fraction
import re
import threading

SHIFT = 32
BASE = 1 << SHIFT
HALF = BASE >> 1
MASK = BASE - 1

# digits are kept well inside the balanced range so sums of a few hundred
# monomials never carry into a neighbour
MAX_DIGIT = 1 << 28

GRADING = "grading"
COEFF = "coefficient"

_PRESET = (
    ["q", "y", "t1", "t2"]
    + ["e%d" % i for i in range(1, 9)]
    + ["Qm", "QB"]
    + ["QF%d" % i for i in range(1, 8)]
    + ["Q", "p", "x", "s", "z"]
)


class VariableRegistry:
    """Ordered set of named formal variables."""

    def __init__(self, names=()):
        self._lock = threading.Lock()
        self.names = []
        self.index = {}
        self.roles = {}
        self._offset = 0
        for n in names:
            self.register(n)

    def register(self, name, role=COEFF):
        with self._lock:
            if name in self.index:
                return self.index[name]
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", name):
                raise ValueError("bad variable name %r" % name)
            i = len(self.names)
            self.names.append(name)
            self.index[name] = i
            self.roles[name] = role
            self._offset = sum(HALF << (SHIFT * j) for j in range(len(self.names) + 1))
            return i

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.index

    @property
    def offset(self):
        return self._offset


REGISTRY = VariableRegistry(_PRESET)


def var_index(name):
    """Index of ``name``, registering it on first use."""
    i = REGISTRY.index.get(name)
    if i is None:
        i = REGISTRY.register(name)
    return i


def _doubled(e):
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError("exponent %s is not on the half-integer lattice" % e)
    d = int(d)
    if abs(d) >= MAX_DIGIT:
        raise OverflowError("exponent %s too large" % e)
    return d


def mono(exps=None, **kw):
    """Pack a monomial from ``{name: exponent}`` (exponents may be halves).

    >>> mono(q=1) == mono({'q': 1})
    True
    """
    key = 0
    items = dict(exps or {})
    items.update(kw)
    for name, e in items.items():
        d = _doubled(e)
        if d:
            key += d << (SHIFT * var_index(name))
    return key


def mono_doubled(dexps):
    """Pack from ``{name: doubled exponent}``."""
    key = 0
    for name, d in dexps.items():
        if d:
            if abs(d) >= MAX_DIGIT:
                raise OverflowError("exponent too large")
            key += int(d) << (SHIFT * var_index(name))
    return key


def var_mono(name, doubled=2):
    return int(doubled) << (SHIFT * var_index(name))


def digit(key, i):
    """Doubled exponent of variable number ``i`` in ``key``."""
    return (((key + REGISTRY.offset) >> (SHIFT * i)) & MASK) - HALF


def exponent2(key, name):
    """Doubled exponent of the named variable."""
    i = REGISTRY.index.get(name)
    if i is None:
        return 0
    return digit(key, i)


def digits(key):
    """Sparse ``{index: doubled exponent}``."""
    out = {}
    if not key:
        return out
    s = key + REGISTRY.offset
    i = 0
    while s:
        d = (s & MASK) - HALF
        if d:
            out[i] = d
        s >>= SHIFT
        i += 1
        if i > len(REGISTRY.names):
            break
    return out


def leading_index(key):
    """Index of the highest variable present (the one fixing the sign)."""
    if not key:
        raise ValueError("unit monomial has no leading variable")
    return max(digits(key))


def to_dict(key):
    """``{name: doubled exponent}``."""
    names = REGISTRY.names
    return {names[i]: d for i, d in digits(key).items()}


def mono_str(key):
    if not key:
        return "1"
    parts = []
    for name, d in sorted(to_dict(key).items(), key=lambda t: REGISTRY.index[t[0]]):
        if d == 2:
            parts.append(name)
        elif d % 2 == 0:
            parts.append("%s^%d" % (name, d // 2))
        else:
            parts.append("%s^(%d/2)" % (name, d))
    return "*".join(parts)


def is_integral(key):
    return all(d % 2 == 0 for d in digits(key).values())


def variables(key):
    names = REGISTRY.names
    return {names[i] for i in digits(key)}


_TOKEN = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^\(?(-?\d+(?:/\d+)?)\)?)?")


def parse_mono(text):
    """Inverse of :func:`mono_str`."""
    text = text.strip()
    if text in ("", "1"):
        return 0
    exps = {}
    for tok in text.split("*"):
        m = _TOKEN.fullmatch(tok.strip())
        if not m:
            raise ValueError("cannot parse monomial %r" % text)
        e = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        exps[m.group(1)] = exps.get(m.group(1), 0) + e
    return mono(exps)
