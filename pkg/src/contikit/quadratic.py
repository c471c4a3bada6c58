"""Exact elements p + q*sqrt(Delta) of a real quadratic field.

Delta is stored un-factored; arithmetic works over Z[x]/(x^2 - Delta), so
no square-free reduction is needed and printed forms match the closed-form
expressions exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DivisionByZero


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadraticNumber:
    p: Fraction
    q: Fraction
    delta: int

    def __post_init__(self):
        object.__setattr__(self, "p", _as_fraction(self.p))
        object.__setattr__(self, "q", _as_fraction(self.q))
        object.__setattr__(self, "delta", int(self.delta))

    def _check(self, other: "QuadraticNumber"):
        if self.delta != other.delta:
            raise ValueError(f"mixed radicands: sqrt({self.delta}) vs sqrt({other.delta})")

    @classmethod
    def rational(cls, x, delta: int) -> "QuadraticNumber":
        return cls(_as_fraction(x), Fraction(0), delta)

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return QuadraticNumber(self.p + other.p, self.q + other.q, self.delta)

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return QuadraticNumber(self.p - other.p, self.q - other.q, self.delta)

    def __neg__(self):
        return QuadraticNumber(-self.p, -self.q, self.delta)

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * self.delta,
            self.p * other.q + self.q * other.p,
            self.delta,
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        self._check(other)
        n = other.norm()
        if n == 0:
            raise DivisionByZero("division by a zero-norm quadratic number")
        conj = other.conjugate()
        num = self * conj
        return QuadraticNumber(num.p / n, num.q / n, self.delta)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def _coerce(self, other) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            return other
        return QuadraticNumber.rational(other, self.delta)

    def __pow__(self, n: int) -> "QuadraticNumber":
        if n < 0:
            return QuadraticNumber.rational(1, self.delta) / self ** (-n)
        out = QuadraticNumber.rational(1, self.delta)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.p, -self.q, self.delta)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.delta

    def is_rational(self) -> bool:
        return self.q == 0

    def mpf(self, dps: int = 50) -> mpmath.mpf:
        """Numeric value at dps decimal digits (requires delta >= 0)."""
        with mpmath.workdps(dps + 10):
            return mpmath.mpf(self.p.numerator) / self.p.denominator + (
                mpmath.mpf(self.q.numerator) / self.q.denominator
            ) * mpmath.sqrt(self.delta)

    def __float__(self) -> float:
        return float(self.mpf(30))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}*sqrt({self.delta})"
        sign = "+" if self.q > 0 else "-"
        return f"{self.p} {sign} {abs(self.q)}*sqrt({self.delta})"

    def to_dict(self) -> dict:
        return {
            "p": f"{self.p.numerator}/{self.p.denominator}",
            "q": f"{self.q.numerator}/{self.q.denominator}",
            "delta": str(self.delta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> "QuadraticNumber":
        return cls(Fraction(obj["p"]), Fraction(obj["q"]), int(obj["delta"]))

    @classmethod
    def from_json(cls, text: str) -> "QuadraticNumber":
        return cls.from_dict(json.loads(text))
