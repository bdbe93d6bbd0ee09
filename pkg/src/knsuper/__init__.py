"""knsuper: exact-arithmetic superalgebras of Krichever-Novikov type.

Structure-constant presentations, their geometric (tensor-density) and
algebraic (doubling) oracles, adjoint Lie superalgebras, density-module
representations, homomorphism/derivation checking, and constructive
simplicity witnesses -- all over the exact coefficient field Q(sqrt 2).
"""

from .scalar import Scalar, parse_scalar, scalar_arith
from .kernel import BasisKey, HalfInt, Vector, hi, key, solve_exact, vec_linear

__all__ = [
    "Scalar", "parse_scalar", "scalar_arith",
    "BasisKey", "HalfInt", "Vector", "hi", "key", "solve_exact", "vec_linear",
]
