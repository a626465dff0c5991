"""Exact series kernel: packed monomials, Laurent polynomials, factored
rational functions and truncated multivariate series."""

from .monomial import (REGISTRY, VariableRegistry, mono, mono_doubled, mono_str, parse_mono,
                       to_dict, var_mono, exponent2)
from .rational import (LaurentPoly, FactoredRational, SingularSpecialization, Substitution,
                       Q, ONE, ZERO)
from .truncated import TruncatedSeries, from_fr
from . import kernel

FR = FactoredRational

__all__ = [
    "REGISTRY", "VariableRegistry", "mono", "mono_doubled", "mono_str", "parse_mono", "to_dict",
    "var_mono", "exponent2", "LaurentPoly", "FactoredRational", "FR", "SingularSpecialization",
    "Substitution", "Q", "ONE", "ZERO", "TruncatedSeries", "from_fr", "kernel",
]
