"""Products inside the commutative subalgebra generated by one arc α.

With ``p = α^2 - 2`` every polynomial in α splits uniquely as
``E(p) + O(p)·α``; this is the form in which products of arc powers are
compared with the Chebyshev identities.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json

from .chebyshev import cheb_T, cheb_Tbar, expand_in_basis, family
from .laurent import ONE, LaurentPoly
from .polyx import PolyX, X

__all__ = [
    "ArcPolyExpansion",
    "expand_arc_poly",
    "product_in_Tbar_basis",
    "product_closed_form",
    "verify_odd_odd_display",
    "structure_constant_rows",
    "rows_to_csv",
]

P_ALPHA = X * X - 2


@dataclasses.dataclass(frozen=True)
class ArcPolyExpansion:
    """``P(α) = even_part(p) + odd_part(p)·α``, both parts polynomials in p."""

    even_part: PolyX
    odd_part: PolyX

    def to_polyx(self) -> PolyX:
        """Substitute ``p = x^2 - 2`` and ``α = x``."""
        return self.even_part.compose(P_ALPHA) + self.odd_part.compose(P_ALPHA) * X

    def to_json(self) -> dict:
        return {
            "even_part": [[m, c.to_json()] for m, c in self.even_part.coeffs.items()],
            "odd_part": [[m, c.to_json()] for m, c in self.odd_part.coeffs.items()],
        }


def expand_arc_poly(p: PolyX) -> ArcPolyExpansion:
    """Rewrite ``P(α)`` over ``{p^m, p^m·α}`` using ``α^2 = p + 2``."""
    even: dict[int, LaurentPoly] = {}
    odd: dict[int, LaurentPoly] = {}
    for d, c in p.coeffs.items():
        (odd if d % 2 else even)[d // 2] = c
    shifted = X + 2  # α^2 as a polynomial in p
    return ArcPolyExpansion(PolyX(even).compose(shifted), PolyX(odd).compose(shifted))


def _oracle_product(m: int, n: int) -> dict[int, LaurentPoly]:
    prod = cheb_Tbar(m) * cheb_Tbar(n)
    coeffs = expand_in_basis(prod, family("Tbar"))
    return {k: c for k, c in enumerate(coeffs) if c}


def product_closed_form(m: int, n: int) -> dict[int, LaurentPoly]:
    if m < 0 or n < 0:
        raise ValueError(f"indices must be >= 0, got ({m}, {n})")
    if m == 0 or n == 0:
        return {m + n: ONE}
    if m == n:
        return {2 * n: ONE, 0: LaurentPoly.const(2)}
    return {m + n: ONE, abs(m - n): ONE}


def product_in_Tbar_basis(m: int, n: int, method: str = "oracle") -> dict[int, LaurentPoly]:
    """Structure constants of ``T̄_m · T̄_n`` in the T̄ basis.

    ``method="oracle"`` multiplies the polynomials and re-expands them;
    ``method="closed"`` uses the product-to-sum rule.  The two must agree.

    >>> product_in_Tbar_basis(4, 4)
    {0: LaurentPoly('2'), 8: LaurentPoly('1')}
    """
    if m < 0 or n < 0:
        raise ValueError(f"indices must be >= 0, got ({m}, {n})")
    if method == "oracle":
        return _oracle_product(m, n)
    if method == "closed":
        return dict(sorted(product_closed_form(m, n).items()))
    raise ValueError(f"unknown method {method!r}")


def verify_odd_odd_display(n: int, m: int) -> bool:
    """Check ``T̄_{2n+1} T̄_{2m+1}`` through the arc/loop exchange.

    Three things must agree: the odd parts multiplied by ``α^2 = p + 2``,
    ``T_{n+m+1}(p) + T_{|n-m|}(p)``, and the direct product in x, which
    must equal ``T_{2(n+m+1)}(x) + T_{2|n-m|}(x)`` (the second summand is 2
    when n = m).
    """
    if n < 0 or m < 0:
        raise ValueError(f"indices must be >= 0, got ({n}, {m})")
    a = expand_arc_poly(cheb_Tbar(2 * n + 1))
    b = expand_arc_poly(cheb_Tbar(2 * m + 1))
    if a.even_part or b.even_part:
        return False
    in_p = a.odd_part * b.odd_part * (X + 2)
    if in_p != cheb_T(n + m + 1) + cheb_T(abs(n - m)):
        return False
    in_x = in_p.compose(P_ALPHA)
    direct = cheb_Tbar(2 * n + 1) * cheb_Tbar(2 * m + 1)
    return in_x == direct == cheb_T(2 * (n + m + 1)) + cheb_T(2 * abs(n - m))


def structure_constant_rows(max_index: int) -> list[tuple[int, int, int, LaurentPoly]]:
    """``(m, n, k, c)`` for every nonzero constant with ``m, n <= max_index``."""
    rows = []
    for m in range(max_index + 1):
        for n in range(max_index + 1):
            for k, c in product_in_Tbar_basis(m, n).items():
                rows.append((m, n, k, c))
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "n", "k", "coefficient_json"])
    for m, n, k, c in rows:
        w.writerow([m, n, k, json.dumps(c.to_json(), separators=(",", ":"))])
    return buf.getvalue()
