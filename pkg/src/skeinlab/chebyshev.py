"""Chebyshev sequences T_n, S_n, T̄_n, U_n and the dominance order on
normalized sequences.

Conventions: ``T_0 = 2, T_1 = x`` and ``S_-1 = 0, S_0 = 1, S_1 = x``, both
continued by ``f_{n+1} = x f_n - f_{n-1}``.  ``T̄_n`` agrees with ``T_n``
except ``T̄_0 = 1``.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Callable

from .laurent import LaurentPoly
from .polyx import PolyX, X

__all__ = [
    "cheb_T",
    "cheb_S",
    "cheb_Tbar",
    "seq_U",
    "s_diff",
    "eps",
    "IDENTITY_TAGS",
    "identity_sides",
    "verify_identity",
    "NormalizedSequence",
    "FAMILIES",
    "family",
    "expand_in_basis",
    "change_of_basis",
    "dominates",
    "first_negative_entry",
]

P_ALPHA = X * X - 2  # x^2 - 2
_STRIDE = 100


@functools.lru_cache(maxsize=None)
def cheb_T(n: int) -> PolyX:
    if n < 0:
        raise ValueError(f"T_n needs n >= 0, got {n}")
    if n == 0:
        return PolyX.const(2)
    if n == 1:
        return X
    if n >= _STRIDE * 2:
        cheb_T(n - _STRIDE)  # fill the cache in strides to bound recursion depth
    return X * cheb_T(n - 1) - cheb_T(n - 2)


@functools.lru_cache(maxsize=None)
def cheb_S(n: int) -> PolyX:
    if n < -1:
        raise ValueError(f"S_n needs n >= -1, got {n}")
    if n == -1:
        return PolyX()
    if n == 0:
        return PolyX.const(1)
    if n >= _STRIDE * 2:
        cheb_S(n - _STRIDE)
    return X * cheb_S(n - 1) - cheb_S(n - 2)


def cheb_Tbar(n: int) -> PolyX:
    if n < 0:
        raise ValueError(f"Tbar_n needs n >= 0, got {n}")
    return PolyX.const(1) if n == 0 else cheb_T(n)


@functools.lru_cache(maxsize=None)
def seq_U(n: int) -> PolyX:
    """(x^2-2)^(n/2) for even n, (x^2-2)^((n-1)/2) * x for odd n."""
    if n < 0:
        raise ValueError(f"U_n needs n >= 0, got {n}")
    if n == 0:
        return PolyX.const(1)
    if n == 1:
        return X
    if n >= _STRIDE * 2:
        seq_U(n - _STRIDE)
    return seq_U(n - 2) * P_ALPHA


@functools.lru_cache(maxsize=None)
def s_diff(n: int) -> PolyX:
    """``S_n - S_{n-1}`` for n >= 0 (so ``s_diff(0) == 1``)."""
    if n < 0:
        raise ValueError(f"S_n - S_(n-1) needs n >= 0, got {n}")
    return cheb_S(n) - cheb_S(n - 1)


def eps(n: int, m: int) -> int:
    return n - m - 1 if n > m else m - n


# -- identities -----------------------------------------------------------

IDENTITY_TAGS = ("eq1", "eq2", "eq3", "eq4", "eq6", "rmk23a", "rmk23b", "rmk23c")

# tags whose statement involves only n
N_ONLY_TAGS = frozenset({"eq2", "eq6", "rmk23a", "rmk23b", "rmk23c"})


def identity_sides(tag: str, n: int, m: int = 0) -> tuple[PolyX, PolyX]:
    """Both sides of an identity, fully expanded.

    ``eq1``   T_m T_n = T_{m+n} + T_{|m-n|}
    ``eq2``   T_{2n}(x) = T_n(x^2 - 2)
    ``eq3``   (S_n - S_{n-1})(S_m - S_{m-1})(x + 2) = T_{n+m+1} + T_{|n-m|}
    ``eq4``   T_n (S_m - S_{m-1}) = (S_{n+m} - S_{n+m-1}) + (S_e - S_{e-1}),  e = eps(n, m)
    ``eq6``   T̄_{2n+1}(x) = (S_n - S_{n-1})(x^2 - 2) * x
    ``rmk23a`` T̄_n = (S_n - S_{n-1}) + (S_{n-1} - S_{n-2}) for n >= 1; T̄_0 = S_0 - S_{-1}
    ``rmk23b`` S_{2n} = sum_{i=0}^{n} T̄_{2n-2i}
    ``rmk23c`` S_{2n+1} = sum_{i=0}^{n} T̄_{2n-2i+1}

    Tags that do not involve ``m`` ignore it.
    """
    if tag not in IDENTITY_TAGS:
        raise ValueError(f"unknown identity tag {tag!r}; expected one of {IDENTITY_TAGS}")
    if n < 0 or m < 0:
        raise ValueError(f"identity {tag} needs n, m >= 0, got n={n}, m={m}")

    if tag == "eq1":
        return cheb_T(m) * cheb_T(n), cheb_T(m + n) + cheb_T(abs(m - n))
    if tag == "eq2":
        return cheb_T(2 * n), cheb_T(n).compose(P_ALPHA)
    if tag == "eq3":
        lhs = s_diff(n) * s_diff(m) * (X + 2)
        return lhs, cheb_T(n + m + 1) + cheb_T(abs(n - m))
    if tag == "eq4":
        return cheb_T(n) * s_diff(m), s_diff(n + m) + s_diff(eps(n, m))
    if tag == "eq6":
        return cheb_Tbar(2 * n + 1), s_diff(n).compose(P_ALPHA) * X
    if tag == "rmk23a":
        if n == 0:
            return cheb_Tbar(0), s_diff(0)
        return cheb_Tbar(n), s_diff(n) + s_diff(n - 1)
    if tag == "rmk23b":
        return cheb_S(2 * n), sum((cheb_Tbar(2 * n - 2 * i) for i in range(n + 1)), PolyX())
    # rmk23c
    return cheb_S(2 * n + 1), sum((cheb_Tbar(2 * n - 2 * i + 1) for i in range(n + 1)), PolyX())


def verify_identity(tag: str, n: int, m: int = 0) -> bool:
    lhs, rhs = identity_sides(tag, n, m)
    return lhs == rhs


# -- normalized sequences -------------------------------------------------

@dataclasses.dataclass(frozen=True)
class NormalizedSequence:
    """A sequence with one monic polynomial of each degree n >= 0.

    Calling the sequence checks monicity and degree and raises ``ValueError``
    if the generator breaks the contract.
    """

    name: str
    generator: Callable[[int], PolyX] = dataclasses.field(compare=False)

    def __call__(self, n: int) -> PolyX:
        if n < 0:
            raise ValueError(f"{self.name}: index must be >= 0, got {n}")
        p = self.generator(n)
        if p.degree != n or not p.is_monic():
            raise ValueError(f"{self.name}_{n} = {p} is not monic of degree {n}")
        return p


FAMILIES: dict[str, NormalizedSequence] = {
    "Tbar": NormalizedSequence("Tbar", cheb_Tbar),
    "S": NormalizedSequence("S", cheb_S),
    "U": NormalizedSequence("U", seq_U),
    "X": NormalizedSequence("X", PolyX.x),
    "SD": NormalizedSequence("SD", s_diff),
}


def family(name: str) -> NormalizedSequence:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}") from None


def expand_in_basis(p: PolyX, basis: NormalizedSequence) -> list[LaurentPoly]:
    """Coefficients ``c`` with ``p = sum_i c[i] * basis(i)``.

    Exact top-down triangular solve; monic basis elements make every step a
    plain subtraction.
    """
    n = p.degree
    if n < 0:
        return []
    coeffs: list[LaurentPoly] = [LaurentPoly()] * (n + 1)
    rest = p
    for d in range(n, -1, -1):
        c = rest.coeff(d)
        if c:
            coeffs[d] = c
            rest = rest - basis(d) * c
    assert rest.is_zero()
    return coeffs


def change_of_basis(a: NormalizedSequence, b: NormalizedSequence, n: int) -> list[list[LaurentPoly]]:
    """Lower-triangular matrix ``M`` with ``a(k) = sum_i M[k][i] b(i)``, k <= n."""
    if n < 0:
        raise ValueError(f"N must be >= 0, got {n}")
    rows = []
    for k in range(n + 1):
        row = expand_in_basis(a(k), b)
        rows.append(row + [LaurentPoly()] * (n - k))
    return rows


def first_negative_entry(a: NormalizedSequence, b: NormalizedSequence, n: int):
    """``(row, col, entry)`` of the first entry outside the cone, else None."""
    for k in range(n + 1):
        for i, c in enumerate(expand_in_basis(a(k), b)):
            if not c.is_nonneg():
                return k, i, c
    return None


def dominates(a: NormalizedSequence, b: NormalizedSequence, n: int) -> bool:
    """``(a_k) >= (b_k)`` truncated at degree n."""
    if n < 0:
        raise ValueError(f"N must be >= 0, got {n}")
    return first_negative_entry(a, b, n) is None
