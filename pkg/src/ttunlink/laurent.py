"""Sparse integer Laurent polynomials in the Kauffman variable A."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable map exponent -> nonzero int coefficient. The zero polynomial is
    the empty map."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            e, v = int(e), int(v)
            c[e] = c.get(e, 0) + v
        self._c = {e: v for e, v in sorted(c.items()) if v}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        return list(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def degree_span(self) -> tuple[int, int] | None:
        if not self._c:
            return None
        keys = list(self._c)
        return keys[0], keys[-1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("only unit monomials are invertible over Z")
            return LaurentPoly({e * k: v ** (-k)})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A**k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def to_json(self) -> list[list[int]]:
        return [[e, v] for e, v in self._c.items()]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((e, v) for e, v in data)

    def in_t(self) -> dict[Fraction, int]:
        """Coefficients keyed by exponent of t = A**-4 (quarter steps allowed)."""
        return {Fraction(-e, 4): v for e, v in self._c.items()}

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                mono = "A" if e == 1 else f"A^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


A = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()
# loop value -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})
