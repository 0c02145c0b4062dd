"""Univariate polynomials in ``x`` with Laurent-polynomial coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .laurent import ONE, ZERO, LaurentPoly

__all__ = ["PolyX", "X"]

Coeff = Union[LaurentPoly, int]


class PolyX:
    """An element of Z[v^±1][x].

    The public view is ``coeffs``: degree -> nonzero LaurentPoly.  Internally
    the polynomial is kept as a flat ``{(degree, v_exponent): int}`` map,
    which keeps products of high-degree Chebyshev polynomials cheap.

    >>> x = PolyX.x()
    >>> (x * x - 2).degree
    2
    >>> str((x + 1) * (x - 1))
    'x^2 - 1'
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, coeffs: Mapping[int, Coeff] | Iterable[Coeff] = ()):
        t: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for d, c in items:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            c = LaurentPoly.coerce(c)
            for k, a in c.items():
                key = (d, k)
                s = t.get(key, 0) + a
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[tuple[int, int], int]) -> PolyX:
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def x(cls, k: int = 1) -> PolyX:
        """The monomial ``x**k``."""
        return cls._raw({(k, 0): 1})

    @classmethod
    def const(cls, c: Coeff) -> PolyX:
        return cls({0: c})

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, LaurentPoly]:
        """Degree -> coefficient, ascending degree, zero coefficients omitted."""
        by_deg: dict[int, dict[int, int]] = {}
        for (d, k), a in self._t.items():
            by_deg.setdefault(d, {})[k] = a
        return {d: LaurentPoly._trusted(by_deg[d]) for d in sorted(by_deg)}

    def coeff(self, d: int) -> LaurentPoly:
        terms = {k: a for (dd, k), a in self._t.items() if dd == d}
        return LaurentPoly._trusted(terms) if terms else ZERO

    @property
    def degree(self) -> int:
        """Highest stored degree; -1 for the zero polynomial."""
        return max((d for d, _ in self._t), default=-1)

    def leading_coeff(self) -> LaurentPoly:
        return self.coeff(self.degree) if self._t else ZERO

    def is_monic(self) -> bool:
        return bool(self._t) and self.leading_coeff() == ONE

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len({d for d, _ in self._t})

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> PolyX | None:
        if isinstance(other, PolyX):
            return other
        if isinstance(other, (int, LaurentPoly)):
            return PolyX.const(other)
        return None

    def __add__(self, other) -> PolyX:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        t = dict(self._t)
        for key, a in other._t.items():
            s = t.get(key, 0) + a
            if s:
                t[key] = s
            else:
                t.pop(key, None)
        return PolyX._raw(t)

    __radd__ = __add__

    def __neg__(self) -> PolyX:
        return PolyX._raw({key: -a for key, a in self._t.items()})

    def __sub__(self, other) -> PolyX:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> PolyX:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> PolyX:
        if isinstance(other, int):
            if not other:
                return PolyX._raw({})
            return PolyX._raw({key: a * other for key, a in self._t.items()})
        other = self._lift(other)
        if other is None:
            return NotImplemented
        acc: dict[tuple[int, int], int] = {}
        for (d1, k1), a1 in self._t.items():
            for (d2, k2), a2 in other._t.items():
                key = (d1 + d2, k1 + k2)
                acc[key] = acc.get(key, 0) + a1 * a2
        return PolyX._raw({key: a for key, a in acc.items() if a})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyX:
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = PolyX.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> PolyX:
        """Multiply by ``x**k``."""
        return PolyX._raw({(d + k, e): a for (d, e), a in self._t.items()})

    def compose(self, inner: PolyX) -> PolyX:
        """``self(inner(x))`` by Horner's rule."""
        result = PolyX._raw({})
        for d in range(self.degree, -1, -1):
            result = result * inner + self.coeff(d)
        return result

    def __call__(self, inner):
        if isinstance(inner, PolyX):
            return self.compose(inner)
        return self.evaluate(inner)

    def evaluate(self, value: Coeff) -> LaurentPoly:
        """Substitute a scalar for ``x``."""
        value = LaurentPoly.coerce(value)
        result = ZERO
        for d in range(self.degree, -1, -1):
            result = result * value + self.coeff(d)
        return result

    def bar(self) -> PolyX:
        return PolyX._raw({(d, -k): a for (d, k), a in self._t.items()})

    # -- comparison, hashing, display -------------------------------------

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"PolyX({str(self)!r})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for d, c in sorted(self.coeffs.items(), reverse=True):
            mono = "1" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if c.is_constant():
                a = c.constant()
                if mono == "1":
                    body = str(abs(a))
                else:
                    body = mono if abs(a) == 1 else f"{abs(a)}{mono}"
                sign = "-" if a < 0 else "+"
            else:
                body = f"({c})" if mono == "1" else f"({c})*{mono}"
                sign = "+"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> dict:
        return {"x_coeffs": [[d, c.to_json()] for d, c in self.coeffs.items()]}

    @classmethod
    def from_json(cls, doc) -> PolyX:
        return cls({int(d): LaurentPoly.from_json(c) for d, c in doc["x_coeffs"]})


X = PolyX.x()
