"""
Exact computations in Iwahori-Hecke algebras of small finite Coxeter groups:
Kazhdan-Lusztig polynomials and the c-basis, the dual module and the map
Lambda, Grothendieck-group coordinates for the transfer operators, central
elements built from traces of irreducible representations, and the
stratified Grothendieck ring of PGL_2.

All arithmetic is exact over Z[v, v^-1] or Q(v).
"""

from .coxeter import CoxeterElement, CoxeterGroup, GroupMismatch, UnsupportedType, coxeter_group
from .hecke import HeckeElt, T, bar, dagger, is_central, mul, t_inverse, transpose
from .klbasis import (KLTable, NoSolution, c_basis, expand_in_T, expand_in_c, inverse_kl,
                      kl_oracle, kl_polynomial, mu, mul_ts_c)
from .laurent import FracLaurent, LaurentPoly, OddExponent, specialize, specialize_surd

__version__ = "0.1.0"

__all__ = [
    "CoxeterElement", "CoxeterGroup", "GroupMismatch", "UnsupportedType", "coxeter_group",
    "HeckeElt", "T", "bar", "dagger", "is_central", "mul", "t_inverse", "transpose",
    "KLTable", "NoSolution", "c_basis", "expand_in_T", "expand_in_c", "inverse_kl",
    "kl_oracle", "kl_polynomial", "mu", "mul_ts_c",
    "FracLaurent", "LaurentPoly", "OddExponent", "specialize", "specialize_surd",
]
