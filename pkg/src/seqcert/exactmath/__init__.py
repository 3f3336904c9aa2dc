"""Exact arithmetic substrate: polynomials, rational functions, ray signs."""

from .expr import parse_expr
from .polynomial import Polynomial, poly_gcd, squarefree_part
from .ratfunc import RationalFunction, max_degree
from .sign import (
    SignKind,
    SignVerdict,
    integer_roots,
    isolate_roots,
    sign_on_ray,
    smallest_ray_start,
    sturm_sequence,
)

__all__ = [
    "Polynomial",
    "RationalFunction",
    "SignKind",
    "SignVerdict",
    "integer_roots",
    "isolate_roots",
    "max_degree",
    "parse_expr",
    "poly_gcd",
    "sign_on_ray",
    "smallest_ray_start",
    "squarefree_part",
    "sturm_sequence",
]
