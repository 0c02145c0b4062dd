"""Local rewriting models for multiplying by powers of an arc α.

Two symbol families are used.

Annulus model (full Dehn twist τ along ``p = α^2 - 2``):
    ``Beta(k)`` is τ^k(β) for an arc β crossing p once;
    ``D(k)`` is τ^k applied to the lower resolution of β·α, so
    ``D(0)`` is the lower one and ``D(1)`` the upper one.

Disk model (half twist σ along p, with z the vertical arc):
    ``Z(k)`` is σ^k(z);
    ``C(k)`` is σ^(k-1) applied to the rising crossing resolution of z·α, so
    ``C(1)`` and ``C(0)`` are the two resolutions and ``C(k+1) = σ(C(k))``;
    ``B(m, eps)`` is ``(L + R)·p^m·α^eps`` with L, R the side arcs.

Multiplication on the right by ``p`` is the only move; everything else is
a polynomial in ``p`` applied by Horner's rule to a seed product.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Callable, Iterable, Mapping

from .arc_products import expand_arc_poly
from .chebyshev import cheb_S, cheb_T, cheb_Tbar, expand_in_basis, family, s_diff
from .laurent import ONE, ZERO, CyclotomicContext, LaurentPoly, divide_exact, q_pow, v_pow
from .polyx import PolyX

__all__ = [
    "Beta", "D", "Z", "C", "B",
    "SkeinElement",
    "annulus_mul_p",
    "beta_mul_Tn_p", "beta_mul_Tn_p_recurrence",
    "beta_mul_SnSm_alpha", "beta_mul_SnSm_alpha_recurrence",
    "beta_mul_Tbar", "beta_mul_Tbar_recurrence",
    "disk_mul_p",
    "z_mul_Tbar_rewrite", "z_mul_Tbar_closed", "z_mul_Tbar_general",
    "explicit_z_product", "extreme_terms", "symmetric_part",
    "symmetric_part_in_Tbar_basis",
    "Tbar_mul_z",
    "mirror_bar", "is_symmetric",
    "transparency_check", "transparency_defects",
    "solve_c_rule",
]

q = q_pow(1)
q_inv = q_pow(-1)
QQ = q_pow(2) + q_pow(-2)  # q^2 + q^-2
Q_SUM = q + q_inv  # q + q^-1


# -- symbols --------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Z:
    k: int
    family = "Z"
    rank = 0

    def sort_key(self):
        return (self.rank, self.k, 0)

    def __str__(self):
        return f"Z({self.k})"


@dataclasses.dataclass(frozen=True)
class C:
    k: int
    family = "C"
    rank = 1

    def sort_key(self):
        return (self.rank, self.k, 0)

    def __str__(self):
        return f"C({self.k})"


@dataclasses.dataclass(frozen=True)
class B:
    m: int
    eps: int

    family = "B"
    rank = 2

    def __post_init__(self):
        if self.m < 0 or self.eps not in (0, 1):
            raise ValueError(f"B(m, eps) needs m >= 0 and eps in (0, 1), got ({self.m}, {self.eps})")

    def sort_key(self):
        return (self.rank, self.eps, self.m)

    def __str__(self):
        return f"B({self.m},{self.eps})"


@dataclasses.dataclass(frozen=True)
class Beta:
    k: int
    family = "BETA"
    rank = 3

    def sort_key(self):
        return (self.rank, self.k, 0)

    def __str__(self):
        return f"BETA({self.k})"


@dataclasses.dataclass(frozen=True)
class D:
    k: int
    family = "D"
    rank = 4

    def sort_key(self):
        return (self.rank, self.k, 0)

    def __str__(self):
        return f"D({self.k})"


def symbol_to_json(sym) -> dict:
    if isinstance(sym, B):
        return {"symbol": "B", "m": sym.m, "eps": sym.eps}
    return {"symbol": sym.family, "k": sym.k}


def symbol_from_json(doc: Mapping):
    fam = doc["symbol"]
    if fam == "B":
        return B(int(doc["m"]), int(doc["eps"]))
    cls = {"Z": Z, "C": C, "BETA": Beta, "D": D}.get(fam)
    if cls is None:
        raise ValueError(f"unknown symbol family {fam!r}")
    return cls(int(doc["k"]))


# -- module elements ------------------------------------------------------

class SkeinElement:
    """A finite Z[q^±1/2]-linear combination of basis symbols."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for sym, c in items:
            c = LaurentPoly.coerce(c)
            acc[sym] = acc.get(sym, ZERO) + c
        self._terms = {s: c for s, c in acc.items() if c}

    @classmethod
    def of(cls, sym, coeff=1) -> SkeinElement:
        return cls([(sym, coeff)])

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, sym) -> LaurentPoly:
        return self._terms.get(sym, ZERO)

    def symbols(self):
        return sorted(self._terms, key=lambda s: s.sort_key())

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: SkeinElement) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return SkeinElement(itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self) -> SkeinElement:
        return SkeinElement((s, -c) for s, c in self._terms.items())

    def __sub__(self, other: SkeinElement) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar) -> SkeinElement:
        scalar = LaurentPoly.coerce(scalar)
        return SkeinElement((s, scalar * c) for s, c in self._terms.items())

    __mul__ = __rmul__

    def map_coeffs(self, f: Callable[[LaurentPoly], LaurentPoly]) -> SkeinElement:
        return SkeinElement((s, f(c)) for s, c in self._terms.items())

    def reduce_mod_order(self, ctx: CyclotomicContext) -> SkeinElement:
        return self.map_coeffs(lambda c: c.reduce_mod(ctx.modulus))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"SkeinElement({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for s in self.symbols():
            c = self._terms[s]
            if c == ONE:
                parts.append(str(s))
            elif len(c) == 1:
                parts.append(f"{c}*{s}")
            else:
                parts.append(f"({c})*{s}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [dict(symbol_to_json(s), coeff=self._terms[s].to_json()) for s in self.symbols()]}

    @classmethod
    def from_json(cls, doc) -> SkeinElement:
        return cls((symbol_from_json(t), LaurentPoly.from_json(t["coeff"])) for t in doc["terms"])


def _linear(rule: Callable[[object], Iterable]) -> Callable[[SkeinElement], SkeinElement]:
    """Extend a symbol -> [(symbol, coeff)] rule linearly."""

    def apply(e: SkeinElement) -> SkeinElement:
        out = []
        for sym, c in e.items():
            out.extend((s, c * r) for s, r in rule(sym))
        return SkeinElement(out)

    return apply


def _mul_poly(seed: SkeinElement, poly: PolyX, step: Callable[[SkeinElement], SkeinElement]) -> SkeinElement:
    """``seed · poly(p)`` where ``step`` is right multiplication by p."""
    result = SkeinElement()
    for d in range(poly.degree, -1, -1):
        result = step(result) + poly.coeff(d) * seed
    return result


def _mul_arc_poly(seed_one, seed_alpha, poly: PolyX, step) -> SkeinElement:
    split = expand_arc_poly(poly)
    return _mul_poly(seed_one, split.even_part, step) + _mul_poly(seed_alpha, split.odd_part, step)


# -- annulus model --------------------------------------------------------

def _annulus_rule(sym):
    if isinstance(sym, Beta):
        return [(Beta(sym.k + 1), q), (Beta(sym.k - 1), q_inv)]
    if isinstance(sym, D):
        return [(D(sym.k + 1), q), (D(sym.k - 1), q_inv)]
    raise TypeError(f"{sym} is not an annulus symbol")


annulus_mul_p = _linear(_annulus_rule)
annulus_mul_p.__name__ = "annulus_mul_p"
annulus_mul_p.__doc__ = "Right multiplication by p in the annulus model."

# β·α by the puncture relation at the shared endpoint
BETA_ALPHA = SkeinElement([(D(1), v_pow(1)), (D(0), v_pow(-1))])


def _check_positive(n: int):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def beta_mul_Tn_p(n: int) -> SkeinElement:
    """``β·T_n(p) = q^n τ^n(β) + q^-n τ^-n(β)``."""
    _check_positive(n)
    return SkeinElement([(Beta(n), q_pow(n)), (Beta(-n), q_pow(-n))])


def beta_mul_Tn_p_recurrence(n: int) -> SkeinElement:
    _check_positive(n)
    return _mul_poly(SkeinElement.of(Beta(0)), cheb_T(n), annulus_mul_p)


def beta_mul_SnSm_alpha(n: int) -> SkeinElement:
    """``β·(S_n - S_{n-1})(p)·α = q^{(2n+1)/2} D(n+1) + q^{-(2n+1)/2} D(-n)``."""
    _check_positive(n)
    return SkeinElement([(D(n + 1), v_pow(2 * n + 1)), (D(-n), v_pow(-(2 * n + 1)))])


def beta_mul_SnSm_alpha_recurrence(n: int) -> SkeinElement:
    _check_positive(n)
    return _mul_poly(BETA_ALPHA, s_diff(n), annulus_mul_p)


def beta_mul_Tbar(n: int) -> SkeinElement:
    """``β·T̄_n(α)`` in closed form; both parities."""
    _check_positive(n)
    k = n // 2
    if n % 2 == 0:
        return SkeinElement([(Beta(k), q_pow(k)), (Beta(-k), q_pow(-k))])
    return SkeinElement([(D(k + 1), v_pow(n)), (D(-k), v_pow(-n))])


def beta_mul_Tbar_recurrence(n: int) -> SkeinElement:
    _check_positive(n)
    return _mul_arc_poly(SkeinElement.of(Beta(0)), BETA_ALPHA, cheb_Tbar(n), annulus_mul_p)


# -- disk model -----------------------------------------------------------

STANDARD_C_RULE = (q_pow(2), q_pow(-2), ONE)


def _disk_rule(c_rule):
    a, b, e = c_rule

    def rule(sym):
        if isinstance(sym, Z):
            return [(Z(sym.k + 1), q_pow(2)), (Z(sym.k - 1), q_pow(-2)), (B(0, 0), Q_SUM)]
        if isinstance(sym, C):
            return [(C(sym.k + 1), a), (C(sym.k - 1), b), (B(0, 1), e)]
        if isinstance(sym, B):
            return [(B(sym.m + 1, sym.eps), ONE)]
        raise TypeError(f"{sym} is not a disk symbol")

    return rule


_standard_disk_step = _linear(_disk_rule(STANDARD_C_RULE))


def disk_mul_p(e: SkeinElement, c_rule=None) -> SkeinElement:
    """Right multiplication by p in the disk model.

    ``c_rule = (A, B, E)`` overrides the crossing rule
    ``C(k)·p = A C(k+1) + B C(k-1) + E B(0,1)``; the default is
    ``(q^2, q^-2, 1)``.
    """
    if c_rule is None:
        return _standard_disk_step(e)
    return _linear(_disk_rule(tuple(LaurentPoly.coerce(c) for c in c_rule)))(e)


Z_ALPHA = SkeinElement([(C(1), q), (C(0), q_inv)])


def z_mul_Tbar_rewrite(n: int, c_rule=None) -> SkeinElement:
    """``z·T̄_n(α)`` by expanding in p and applying the rewrite rules."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if c_rule is None:
        step = _standard_disk_step
    else:
        step = functools.partial(disk_mul_p, c_rule=c_rule)
    return _mul_arc_poly(SkeinElement.of(Z(0)), Z_ALPHA, cheb_Tbar(n), step)


def _lr_terms(poly: PolyX, eps: int) -> SkeinElement:
    """``(L + R)·poly(p)·α^eps`` over the B symbols."""
    return SkeinElement((B(m, eps), c) for m, c in poly.coeffs.items())


def explicit_z_product(n: int) -> SkeinElement:
    """The explicit small products z·T̄_n(α) for n = 0..5."""
    if n == 0:
        return SkeinElement.of(Z(0))
    if n == 1:
        return Z_ALPHA
    if n == 2:
        return SkeinElement([(Z(1), q_pow(2)), (Z(-1), q_pow(-2)), (B(0, 0), Q_SUM)])
    if n == 3:
        return SkeinElement([(C(2), q_pow(3)), (C(-1), q_pow(-3)), (B(0, 1), Q_SUM)])
    if n == 4:
        return SkeinElement([
            (Z(2), q_pow(4)), (Z(-2), q_pow(-4)),
            (B(0, 0), Q_SUM * QQ), (B(1, 0), Q_SUM),
        ])
    if n == 5:
        return SkeinElement([
            (C(3), q_pow(5)), (C(-2), q_pow(-5)),
            (B(0, 1), q_pow(3) + q_pow(-3)), (B(1, 1), Q_SUM),
        ])
    raise ValueError(f"no explicit formula for n = {n}; use z_mul_Tbar_general")


def z_mul_Tbar_general(n: int) -> SkeinElement:
    """Closed form of ``z·T̄_n(α)`` valid for every n >= 0.

    Odd n = 2k+1::

        q^n C(k+1) + q^-n C(-k)
          + (q + q^-1) sum_{i=1}^{k} S_{i-1}(q^2 + q^-2) (L+R) T̄_{2k-2i+1}(α)

    Even n = 2k::

        q^{2k} Z(k) + q^{-2k} Z(-k)
          + (q + q^-1) sum_{i=0}^{k-1} T̄_i(q^2 + q^-2) (L+R) S_{k-i-1}(p)

    The leading Z terms are ``T_k(q^2 σ + q^-2 σ^-1)(z)`` collapsed through
    ``T_k(u + u^-1) = u^k + u^-k``.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    k = n // 2
    if n == 0:
        return SkeinElement.of(Z(0))
    if n % 2:
        out = SkeinElement([(C(k + 1), q_pow(n)), (C(-k), q_pow(-n))])
        for i in range(1, k + 1):
            scalar = Q_SUM * cheb_S(i - 1).evaluate(QQ)
            out = out + scalar * _lr_terms(s_diff(k - i), 1)
        return out
    out = SkeinElement([(Z(k), q_pow(2 * k)), (Z(-k), q_pow(-2 * k))])
    for i in range(k):
        scalar = Q_SUM * cheb_Tbar(i).evaluate(QQ)
        out = out + scalar * _lr_terms(cheb_S(k - i - 1), 0)
    return out


def z_mul_Tbar_closed(n: int) -> SkeinElement:
    """``z·T̄_n(α)``: explicit formulas for n <= 5, the general form beyond."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n <= 5:
        return explicit_z_product(n)
    return z_mul_Tbar_general(n)


def extreme_terms(n: int) -> SkeinElement:
    """The two twisted crossing terms of ``z·T̄_n(α)`` for odd n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"extreme terms exist for odd n only, got {n}")
    k = n // 2
    return SkeinElement([(C(k + 1), q_pow(n)), (C(-k), q_pow(-n))])


def symmetric_part(n: int) -> SkeinElement:
    """``z·T̄_n(α)`` without its extreme crossing terms (odd n), or all of it (even n)."""
    e = z_mul_Tbar_closed(n)
    return e - extreme_terms(n) if n % 2 else e


def symmetric_part_in_Tbar_basis(e: SkeinElement) -> dict[int, LaurentPoly]:
    """Coefficients of the ``(L+R)`` terms of ``e`` over ``(L+R) T̄_j(α)``.

    ``B(m, 0)`` terms are re-expanded over ``T̄_{2j}(α) = T̄_j(p)`` and
    ``B(m, 1)`` terms over ``T̄_{2j+1}(α) = (S_j - S_{j-1})(p) α``; the key is
    the α-degree j of ``T̄_j(α)``.  Positivity of the symmetric part is
    meant in this basis.
    """
    by_eps: dict[int, dict[int, LaurentPoly]] = {0: {}, 1: {}}
    for sym, c in e.items():
        if isinstance(sym, B):
            by_eps[sym.eps][sym.m] = c
    out: dict[int, LaurentPoly] = {}
    for eps, fam in ((0, "Tbar"), (1, "SD")):
        for j, c in enumerate(expand_in_basis(PolyX(by_eps[eps]), family(fam))):
            if c:
                out[2 * j + eps] = c
    return dict(sorted(out.items()))


_MIRROR = {
    Z: lambda s: Z(-s.k),
    C: lambda s: C(1 - s.k),
    B: lambda s: s,
    Beta: lambda s: Beta(-s.k),
    D: lambda s: D(1 - s.k),
}


def mirror_bar(e: SkeinElement) -> SkeinElement:
    """Bar every coefficient and reflect every symbol across the vertical axis."""
    return SkeinElement((_MIRROR[type(s)](s), c.bar()) for s, c in e.items())


def is_symmetric(e: SkeinElement) -> bool:
    return mirror_bar(e) == e


def Tbar_mul_z(n: int) -> SkeinElement:
    """``T̄_n(α)·z``.

    Odd n: the extreme coefficients trade places, the symmetric part is
    unchanged.  Even n: the mirror image of ``z·T̄_n(α)``; this case is a
    modelling assumption, not a derived formula.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n % 2 == 0:
        return mirror_bar(z_mul_Tbar_closed(n))
    k = n // 2
    swapped = SkeinElement([(C(k + 1), q_pow(-n)), (C(-k), q_pow(n))])
    return swapped + symmetric_part(n)


# -- transparency ---------------------------------------------------------

def transparency_defects(n: int, modulus: int | None = None) -> dict[str, SkeinElement]:
    """Reduced commutators of ``T̄_n(α)`` with z and with the side arc β'.

    β' is modelled on the annulus symbols with τ = σ^2, and its right
    product is the mirror image of its left product.
    """
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    ctx = CyclotomicContext(4 * n if modulus is None else modulus)
    left_z = z_mul_Tbar_closed(n)
    left_beta = beta_mul_Tbar(n)
    return {
        "z": (left_z - Tbar_mul_z(n)).reduce_mod_order(ctx),
        "beta_prime": (left_beta - mirror_bar(left_beta)).reduce_mod_order(ctx),
    }


def transparency_check(n: int, modulus: int | None = None) -> bool:
    """True iff ``T̄_n(α)`` commutes with z and β' modulo ``v^M = 1``.

    ``M`` defaults to 4n, the quotient in which q^2 has order dividing n.
    """
    return not any(transparency_defects(n, modulus).values())


# -- recovering the crossing rule -----------------------------------------

def _det3(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def solve_c_rule() -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Recover ``(A, B, E)`` of the crossing rule from the explicit products.

    ``z·T̄_3(α)`` applies the crossing rule exactly once, so its output is
    affine in ``(A, B, E)``.  The affine system is solved by Cramer's rule on
    a nonsingular 3x3 minor (so the solution is unique) and the result is
    then checked against the n = 1, 3, 5 products.  Raises ``ArithmeticError``
    if the system is singular, inconsistent, or has no solution in Z[q^±1/2].
    """
    zero = (ZERO, ZERO, ZERO)
    units = [(ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)]
    base = z_mul_Tbar_rewrite(3, c_rule=zero)
    cols = [z_mul_Tbar_rewrite(3, c_rule=u) - base for u in units]
    target = explicit_z_product(3) - base

    probe = (q_pow(3), LaurentPoly.const(2), v_pow(1))
    if z_mul_Tbar_rewrite(3, c_rule=probe) != base + sum(
        (p * col for p, col in zip(probe, cols)), SkeinElement()
    ):
        raise ArithmeticError("n = 3 output is not affine in the rule coefficients")

    symbols = sorted(
        set(target.terms).union(*(col.terms for col in cols)), key=lambda s: s.sort_key()
    )
    rows = [[col.coeff(s) for col in cols] for s in symbols]
    rhs = [target.coeff(s) for s in symbols]

    for idx in itertools.combinations(range(len(rows)), 3):
        mat = [rows[i] for i in idx]
        det = _det3(mat)
        if not det:
            continue
        sol = []
        for j in range(3):
            mj = [r[:j] + [rhs[i]] + r[j + 1:] for r, i in zip(mat, idx)]
            sol.append(divide_exact(_det3(mj), det))
        break
    else:
        raise ArithmeticError("crossing rule is not determined by the n = 3 product")

    for row, b in zip(rows, rhs):
        if sum((c * s for c, s in zip(row, sol)), ZERO) != b:
            raise ArithmeticError("n = 3 product is inconsistent with any crossing rule")
    rule = tuple(sol)
    for n in (1, 3, 5):
        if z_mul_Tbar_rewrite(n, c_rule=rule) != explicit_z_product(n):
            raise ArithmeticError(f"recovered rule {rule} does not reproduce n = {n}")
    return rule
