"""Select the polynomial kernel.

The compiled extension is used when it was built; otherwise the pure-Python
module.  Setting ``GVINDEX_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("GVINDEX_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernel_py as impl
else:
    try:
        from . import _kernel as impl
    except ImportError:  # extension not built
        from . import _kernel_py as impl

mul = impl.mul
add = impl.add
scale_shift = impl.scale_shift
mul_binomial = impl.mul_binomial
div_binomial = impl.div_binomial
NAME = impl.NAME
