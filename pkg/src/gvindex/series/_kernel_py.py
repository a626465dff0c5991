"""Pure-Python sparse polynomial kernel.

Polynomials are plain dicts ``{packed monomial: mpq}`` with no zero values.
The compiled module ``_kernel`` exposes the same functions; ``kernel.py``
picks one at import time.
"""

from .monomial import REGISTRY, SHIFT, MASK, HALF

NAME = "python"


def mul(a, b):
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    items = list(a.items())
    for kb, cb in b.items():
        for ka, ca in items:
            k = ka + kb
            v = get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: v for k, v in out.items() if v}


def add(a, b, scale=1):
    """``a + scale*b`` as a new dict."""
    out = dict(a)
    get = out.get
    for k, v in b.items():
        w = get(k)
        if scale != 1:
            v = v * scale
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def scale_shift(a, c, shift):
    """``c * x**shift * a``."""
    if not c:
        return {}
    if c == 1:
        return {k + shift: v for k, v in a.items()}
    return {k + shift: v * c for k, v in a.items()}


def mul_binomial(a, c, m, power=1):
    """``a * (1 - c x**m)**power`` for ``power >= 0``."""
    for _ in range(power):
        out = dict(a)
        get = out.get
        for k, v in a.items():
            k2 = k + m
            w = get(k2)
            t = -c * v
            if w is None:
                out[k2] = t
            else:
                w = w + t
                if w:
                    out[k2] = w
                else:
                    del out[k2]
        a = out
    return a


def div_binomial(a, c, m, lead):
    """Exact quotient ``a / (1 - c x**m)`` or ``None``.

    ``lead`` is the index of a variable occurring in ``m``.  Terms of ``a``
    are grouped into lines parallel to ``m`` and divided one line at a time.
    """
    if not a:
        return {}
    off = REGISTRY.offset
    sh = SHIFT * lead
    dm = (((m + off) >> sh) & MASK) - HALF
    lines = {}
    for k, v in a.items():
        dk = (((k + off) >> sh) & MASK) - HALF
        j = dk // dm
        base = k - j * m
        line = lines.get(base)
        if line is None:
            lines[base] = {j: v}
        else:
            line[j] = v
    out = {}
    for base, line in lines.items():
        lo = min(line)
        hi = max(line)
        r = 0
        for j in range(lo, hi + 1):
            r = line.get(j, 0) + c * r
            if j == hi:
                if r:
                    return None
            elif r:
                out[base + j * m] = r
    return out
