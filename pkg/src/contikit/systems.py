"""Periodic coefficient systems for generalized continued fractions.

A system holds the period d, the partial numerators a_1..a_d, the partial
denominators b_1..b_d and the leading term b_0.  Coefficients for nu >= 1
repeat with period d; b_0 is special and only enters numerator-side
continuants.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InvalidSystem

# JSON integers above this magnitude are serialized as decimal strings.
_JSON_INT_LIMIT = 2**53


@dataclass(frozen=True)
class PeriodicSystem:
    d: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    b0: int = 1
    strict: bool = True

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.d < 1:
            raise InvalidSystem(f"period d must be >= 1, got {self.d}")
        if len(self.a) != self.d or len(self.b) != self.d:
            raise InvalidSystem(
                f"need {self.d} coefficients, got {len(self.a)} a's and {len(self.b)} b's"
            )
        if any(x == 0 for x in self.a):
            raise InvalidSystem("partial numerators a_i must be nonzero")
        if self.strict and (any(x < 1 for x in self.a) or any(x < 1 for x in self.b)):
            raise InvalidSystem("strict mode requires a_i >= 1 and b_i >= 1")

    def coeff_a(self, nu: int) -> int:
        """a_nu under the periodic lookup (valid for any integer nu)."""
        return self.a[(nu - 1) % self.d]

    def coeff_b(self, nu: int) -> int:
        """b_nu under the periodic lookup; b_0 is the stored leading term."""
        if nu == 0:
            return self.b0
        return self.b[(nu - 1) % self.d]

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        def enc(x: int):
            return x if abs(x) < _JSON_INT_LIMIT else str(x)

        return {
            "d": self.d,
            "a": [enc(x) for x in self.a],
            "b": [enc(x) for x in self.b],
            "b0": enc(self.b0),
            "strict": self.strict,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "PeriodicSystem":
        return cls(
            d=int(obj["d"]),
            a=tuple(int(x) for x in obj["a"]),
            b=tuple(int(x) for x in obj["b"]),
            b0=int(obj.get("b0", 1)),
            strict=bool(obj.get("strict", True)),
        )

    @classmethod
    def from_json(cls, text: str) -> "PeriodicSystem":
        return cls.from_dict(json.loads(text))


# The sqrt(8) convergent-denominator system, used as a worked example all over
# the test suite: B = 1, 1, 5, 6, 29, 35, 169, 204, 985, ...
S8 = PeriodicSystem(d=2, a=(1, 1), b=(1, 4), b0=2)

# (a_nu) = (b_nu) = (1) gives B_nu = F_{nu+1}, the Fibonacci numbers.
FIB = PeriodicSystem(d=1, a=(1,), b=(1,), b0=1)
