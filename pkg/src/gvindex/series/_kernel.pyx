# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernel (same API as ``_kernel_py``)."""

from .monomial import REGISTRY, SHIFT, MASK, HALF

NAME = "cython"


def mul(dict a, dict b):
    cdef dict out
    cdef list items
    cdef Py_ssize_t i, n
    cdef object kb, cb, ka, ca, k, v
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out = {}
    items = list(a.items())
    n = len(items)
    for kb, cb in b.items():
        for i in range(n):
            ka, ca = <tuple>items[i]
            k = ka + kb
            v = out.get(k)
            if v is None:
                out[k] = ca * cb
            else:
                out[k] = v + ca * cb
    return {k: v for k, v in out.items() if v}


def add(dict a, dict b, scale=1):
    cdef dict out = dict(a)
    cdef object k, v, w
    cdef bint plain = scale == 1
    for k, v in b.items():
        if not plain:
            v = v * scale
        w = out.get(k)
        if w is None:
            out[k] = v
        else:
            w = w + v
            if w:
                out[k] = w
            else:
                del out[k]
    return out


def scale_shift(dict a, c, shift):
    if not c:
        return {}
    if c == 1:
        return {k + shift: v for k, v in a.items()}
    return {k + shift: v * c for k, v in a.items()}


def mul_binomial(dict a, c, m, int power=1):
    cdef dict out
    cdef object k, v, w, t, k2
    cdef int p
    cdef object negc = -c
    for p in range(power):
        out = dict(a)
        for k, v in a.items():
            k2 = k + m
            t = negc * v
            w = out.get(k2)
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


def div_binomial(dict a, c, m, int lead):
    cdef dict lines = {}
    cdef dict line
    cdef dict out = {}
    cdef object k, v, base, r, off
    cdef long dm, dk, j, lo, hi
    cdef int sh = SHIFT * lead
    if not a:
        return {}
    off = REGISTRY.offset
    dm = <long>(((m + off) >> sh) & MASK) - HALF
    for k, v in a.items():
        dk = <long>(((k + off) >> sh) & MASK) - HALF
        # floor division for signed longs
        j = dk // dm
        base = k - j * m
        line = lines.get(base)
        if line is None:
            lines[base] = {j: v}
        else:
            line[j] = v
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
