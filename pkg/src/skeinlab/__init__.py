"""Exact Chebyshev-basis calculus for Roger–Yang skein algebras.

Scalars are integer Laurent polynomials in ``v = q^(1/2)``; polynomials in
an arc are ``PolyX`` objects; local products of arcs and curves are
``SkeinElement`` combinations of twist-model symbols.
"""

from .laurent import ONE, ZERO, CyclotomicContext, LaurentPoly, q_pow, v_pow
from .polyx import PolyX, X
from .chebyshev import (
    FAMILIES,
    NormalizedSequence,
    change_of_basis,
    cheb_S,
    cheb_T,
    cheb_Tbar,
    dominates,
    eps,
    s_diff,
    seq_U,
    verify_identity,
)
from .arc_products import expand_arc_poly, product_in_Tbar_basis, verify_odd_odd_display
from .twist_models import SkeinElement, transparency_check, z_mul_Tbar_closed, z_mul_Tbar_rewrite
from .audit import audit_R1_Rn, expand_in_Tbar, lower_bound_check

__version__ = "0.1.0"
