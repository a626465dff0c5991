"""Compiled vs pure-Python polynomial kernel.

    python3 benchmarks/bench_kernel.py [--repeat 3] [--number 50]

Times the raw kernel operations on random sparse polynomials, then one
end-to-end computation per kernel in a fresh interpreter (the kernel is
chosen at import time through GVINDEX_PURE_PYTHON).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from gmpy2 import mpq

from gvindex.series import var_mono
from gvindex.series import _kernel_py
from gvindex.series.monomial import leading_index

try:
    from gvindex.series import _kernel as _kernel_c
except ImportError:
    _kernel_c = None

END_TO_END = ("from gvindex.instanton import genus_series; import time; t = time.perf_counter(); "
              "genus_series(2, 'chiy', 3); print(time.perf_counter() - t)")


def random_poly(rng, n, names=("q", "y", "t1")):
    keys = [var_mono(v) for v in names]
    p = {}
    for _ in range(n):
        k = sum(rng.randint(-4, 6) * x for x in keys)
        p[k] = mpq(rng.randint(-9, 9) or 1, rng.randint(1, 4))
    return p


def kernel_cases(mod, rng):
    a, b = random_poly(rng, 60), random_poly(rng, 60)
    m = var_mono("q") + var_mono("y")
    prod = mod.mul_binomial(a, mpq(1), m, 3)
    lead = leading_index(m)
    return {
        "mul 60x60": lambda: mod.mul(a, b),
        "add": lambda: mod.add(a, b),
        "mul_binomial ^3": lambda: mod.mul_binomial(a, mpq(1), m, 3),
        "div_binomial": lambda: mod.div_binomial(prod, mpq(1), m, lead),
    }


def end_to_end(pure):
    env = dict(os.environ, GVINDEX_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--number", type=int, default=50)
    args = ap.parse_args(argv)

    mods = [("python", _kernel_py)]
    if _kernel_c is not None:
        mods.append(("cython", _kernel_c))
    else:
        print("compiled kernel not built; timing the fallback only")

    rows = {}
    for name, mod in mods:
        for case, fn in kernel_cases(mod, random.Random(0)).items():
            t = min(timeit.repeat(fn, number=args.number, repeat=args.repeat)) / args.number
            rows.setdefault(case, {})[name] = t

    print("%-18s %12s %12s %8s" % ("operation", "python (us)", "cython (us)", "speedup"))
    for case, r in rows.items():
        py, cy = r["python"], r.get("cython")
        print("%-18s %12.1f %12s %8s" % (case, py * 1e6, "%.1f" % (cy * 1e6) if cy else "-",
                                         "%.2fx" % (py / cy) if cy else "-"))

    py = end_to_end(True)
    print("\nend to end: chi_y genus of M(2, k), k <= 3")
    print("  python kernel  %.3f s" % py)
    if _kernel_c is not None:
        cy = end_to_end(False)
        print("  cython kernel  %.3f s  (%.2fx)" % (cy, py / cy))


if __name__ == "__main__":
    main()
