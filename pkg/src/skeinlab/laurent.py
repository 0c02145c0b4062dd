"""Sparse integer Laurent polynomials in v = q^(1/2).

Every scalar of the toolkit lives here.  Exponents count powers of ``v`` so
that ``q**k`` is ``v**(2k)`` and half-integer powers of ``q`` are ordinary
monomials.  Coefficients are Python ints (arbitrary precision).

>>> q = q_pow(1)
>>> (q + q**-1) ** 2
LaurentPoly('q^2 + 2 + q^-2')
>>> (q + q**-1).bar() == q + q**-1
True
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping, Union

__all__ = [
    "LaurentPoly",
    "CyclotomicContext",
    "ZERO",
    "ONE",
    "v_pow",
    "q_pow",
    "add",
    "mul",
    "is_nonneg",
    "bar",
    "reduce_mod_order",
    "divide_exact",
]

Scalar = Union["LaurentPoly", int]


class LaurentPoly:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for k, c in items:
            k, c = int(k), int(c)
            acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees: int keys, nonzero int values
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._trusted({0: c}) if c else ZERO

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPoly:
        return cls._trusted({k: c}) if c else ZERO

    @staticmethod
    def coerce(x: Scalar) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map, ascending exponents."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, k: int) -> int:
        return self._terms.get(k, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant(self) -> int:
        return self._terms.get(0, 0)

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    # -- ring operations --------------------------------------------------

    def __add__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return LaurentPoly._trusted(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._trusted({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._trusted({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPoly._trusted({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            # only monomials with unit coefficient are invertible
            if len(self._terms) == 1:
                (k, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly._trusted({k * e: c ** (-e)})
            raise ArithmeticError(f"{self!r} is not a unit")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        return LaurentPoly._trusted({e + k: c for e, c in self._terms.items()})

    # -- involutions and cones --------------------------------------------

    def bar(self) -> LaurentPoly:
        """The ring involution v -> v^-1."""
        return LaurentPoly._trusted({-k: c for k, c in self._terms.items()})

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def reduce_mod(self, modulus: int) -> LaurentPoly:
        if modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {modulus}")
        acc: dict[int, int] = {}
        for k, c in self._terms.items():
            r = k % modulus
            acc[r] = acc.get(r, 0) + c
        return LaurentPoly._trusted({k: c for k, c in acc.items() if c})

    def evaluate(self, x):
        """Substitute ``v = x``; ``x`` must support ``**`` with negative ints."""
        return sum(c * x**k for k, c in self._terms.items())

    # -- comparison, hashing, display -------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            mono = _q_monomial(k)
            if mono == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- JSON -------------------------------------------------------------

    def to_json(self) -> dict:
        return {"v_exponents": [[k, str(c)] for k, c in self._terms.items()]}

    @classmethod
    def from_json(cls, doc) -> LaurentPoly:
        """Accepts the ``v_exponents`` document or a bare integer."""
        if isinstance(doc, bool):
            raise ValueError("booleans are not Laurent polynomials")
        if isinstance(doc, int):
            return cls.const(doc)
        if isinstance(doc, str):
            return cls.const(int(doc))
        if not isinstance(doc, dict) or "v_exponents" not in doc:
            raise ValueError(f"not a LaurentPoly document: {doc!r}")
        return cls((int(k), int(c)) for k, c in doc["v_exponents"])


def _q_monomial(k: int) -> str:
    if k == 0:
        return "1"
    if k % 2 == 0:
        e = k // 2
        return "q" if e == 1 else f"q^{e}"
    return f"q^({k}/2)"


ZERO = LaurentPoly._trusted({})
ONE = LaurentPoly._trusted({0: 1})


def v_pow(k: int) -> LaurentPoly:
    """``v**k = q**(k/2)``."""
    return LaurentPoly._trusted({k: 1})


def q_pow(k: int) -> LaurentPoly:
    """``q**k = v**(2k)``."""
    return LaurentPoly._trusted({2 * k: 1})


@dataclasses.dataclass(frozen=True)
class CyclotomicContext:
    """Quotient of Z[v^±1] by ``v**modulus - 1``.

    ``for_order(N)`` gives the modulus 4N used for "q^2 is a primitive N-th
    root of unity": equality in this quotient implies equality at every such
    root.
    """

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.modulus!r}")

    @classmethod
    def for_order(cls, n: int) -> CyclotomicContext:
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        return cls(4 * n)


# Functional spellings of the ring operations.

def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def is_nonneg(a: LaurentPoly) -> bool:
    return a.is_nonneg()


def bar(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def reduce_mod_order(a: LaurentPoly, ctx: CyclotomicContext) -> LaurentPoly:
    """Image of ``a`` in Z[v]/(v^M - 1), exponents in ``[0, M)``."""
    return a.reduce_mod(ctx.modulus)


def divide_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``a / b`` when the quotient lies in Z[v^±1].

    Raises ``ZeroDivisionError`` for ``b == 0`` and ``ArithmeticError`` when
    the division is not exact.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if a.is_zero():
        return ZERO
    # shift both into ordinary polynomials and run long division from the top
    rem = dict(a.shift(-a.min_exponent()).items())
    den = b.shift(-b.min_exponent())
    dtop = den.max_exponent()
    dlead = den[dtop]
    quot: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top < dtop:
            raise ArithmeticError(f"{b} does not divide {a}")
        c, r = divmod(rem[top], dlead)
        if r:
            raise ArithmeticError(f"{b} does not divide {a}")
        quot[top - dtop] = c
        for k, dc in den.items():
            kk = k + top - dtop
            s = rem.get(kk, 0) - c * dc
            if s:
                rem[kk] = s
            else:
                rem.pop(kk, None)
    return LaurentPoly._trusted(quot).shift(a.min_exponent() - b.min_exponent())
