"""Necessary conditions for a normalized sequence to give a positive basis.

Write ``R_1 = x + a`` and ``R_n = sum_k c_k T̄_k``.  Multiplying
``R_1(β)·R_n(α)`` out in the annulus model and substituting
``X = R_1(X) - a`` for every resulting arc leaves a scalar term ``d``; a
positive basis needs ``a``, every ``c_k`` and ``d`` in the cone, which
forces ``a = 0``.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from .chebyshev import NormalizedSequence, expand_in_basis, family
from .laurent import ZERO, LaurentPoly, q_pow, v_pow
from .polyx import PolyX
from .twist_models import Beta, SkeinElement, beta_mul_Tbar, symbol_to_json

__all__ = [
    "Rn",
    "AuditReport",
    "expand_in_Tbar",
    "audit_R1_Rn",
    "d_closed_form",
    "lower_bound_check",
]


@dataclasses.dataclass(frozen=True)
class Rn:
    """Placeholder row for the ``R_n(α)`` term of the expansion."""

    n: int
    family = "R"
    rank = 5

    def sort_key(self):
        return (self.rank, self.n, 0)

    def __str__(self):
        return f"R_{self.n}(alpha)"


@dataclasses.dataclass(frozen=True)
class AuditReport:
    a: LaurentPoly
    c: tuple[LaurentPoly, ...]
    term_coefficients: dict
    d: LaurentPoly

    def __post_init__(self):
        if any(not v for v in self.term_coefficients.values()):
            raise ValueError("term_coefficients must not store zeros")

    def terms_nonneg(self) -> bool:
        return all(v.is_nonneg() for v in self.term_coefficients.values())

    def to_json(self) -> dict:
        terms = []
        for sym in sorted(self.term_coefficients, key=lambda s: s.sort_key()):
            row = {"symbol": "R", "n": sym.n} if isinstance(sym, Rn) else symbol_to_json(sym)
            row["coeff"] = self.term_coefficients[sym].to_json()
            terms.append(row)
        return {
            "a": self.a.to_json(),
            "c": [ck.to_json() for ck in self.c],
            "terms": terms,
            "d": self.d.to_json(),
        }


def expand_in_Tbar(p: PolyX) -> list[LaurentPoly]:
    """``(c_0, ..., c_deg)`` with ``p = sum c_k T̄_k``.

    >>> [str(c) for c in expand_in_Tbar(PolyX.x(2))]
    ['2', '0', '1']
    """
    return expand_in_basis(p, family("Tbar"))


def audit_R1_Rn(a, c: Sequence) -> AuditReport:
    """Expand ``R_1(β)·R_n(α)`` with ``R_1 = x + a`` and ``R_n = sum c_k T̄_k(α)``.

    ``term_coefficients`` holds the coefficient of ``R_1(X)`` for every arc
    X produced by the annulus model, plus the coefficient ``a`` of
    ``R_n(α)`` under the ``Rn`` key.  ``d`` is the leftover scalar, computed
    from the expansion itself (see ``d_closed_form`` for the formula).
    """
    a = LaurentPoly.coerce(a)
    c = tuple(LaurentPoly.coerce(ck) for ck in c)
    beta_part = SkeinElement()
    for k, ck in enumerate(c):
        if not ck:
            continue
        prod = SkeinElement.of(Beta(0)) if k == 0 else beta_mul_Tbar(k)
        beta_part = beta_part + ck * prod
    terms = dict(beta_part.items())
    if a:
        terms[Rn(max(len(c) - 1, 0))] = a
    # every arc X is rewritten as R_1(X) - a
    d = -a * sum((coef for _, coef in beta_part.items()), ZERO)
    return AuditReport(a=a, c=c, term_coefficients=terms, d=d)


def d_closed_form(a, c: Sequence) -> LaurentPoly:
    """``-a (c_0 + sum_k c_2k (q^k + q^-k) + sum_k c_2k+1 (q^{(2k+1)/2} + q^{-(2k+1)/2}))``."""
    a = LaurentPoly.coerce(a)
    total = ZERO
    for j, cj in enumerate(c):
        cj = LaurentPoly.coerce(cj)
        if j == 0:
            total = total + cj
        elif j % 2 == 0:
            total = total + cj * (q_pow(j // 2) + q_pow(-(j // 2)))
        else:
            total = total + cj * (v_pow(j) + v_pow(-j))
    return -a * total


def lower_bound_check(seq: NormalizedSequence, n: int) -> bool:
    """True iff ``R_1 = x`` and each ``R_k`` (k <= n) is a cone combination of T̄."""
    if n < 0:
        raise ValueError(f"N must be >= 0, got {n}")
    if seq(1) != PolyX.x():
        return False
    for k in range(n + 1):
        if not all(ck.is_nonneg() for ck in expand_in_Tbar(seq(k))):
            return False
    return True
