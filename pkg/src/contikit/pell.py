"""Continued fraction of sqrt(N) and Pell equation solutions.

The expansion uses the classical (m, q) iteration; the period is closed at
the first repetition of the (m, q) state, and the standard structural fact
that the last partial quotient equals 2*floor(sqrt(N)) is asserted as a
sanity check only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .continuants import continuant_pair
from .errors import PerfectSquare
from .systems import PeriodicSystem


@dataclass(frozen=True)
class SqrtExpansion:
    n: int
    a0: int
    period: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.period)

    def __str__(self) -> str:
        block = ",".join(str(x) for x in self.period)
        return f"sqrt({self.n}) = [{self.a0}; ({block})] period d={self.d}"


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    n: int

    def __post_init__(self):
        assert self.x * self.x - self.n * self.y * self.y == 1


def expand_sqrt(n: int) -> SqrtExpansion:
    """Minimal-period continued fraction expansion of sqrt(n)."""
    if n < 2:
        raise PerfectSquare(f"need N >= 2, got {n}")
    a0 = math.isqrt(n)
    if a0 * a0 == n:
        raise PerfectSquare(f"{n} is a perfect square")
    period = []
    m, q = 0, 1
    m = a0 * q - m  # state after emitting a0
    q = (n - m * m) // q
    first = (m, q)
    while True:
        ak = (a0 + m) // q
        period.append(ak)
        m = ak * q - m
        q = (n - m * m) // q
        if (m, q) == first:
            break
    assert period[-1] == 2 * a0, "expansion structure check failed"
    return SqrtExpansion(n, a0, tuple(period))


def to_system(expansion: SqrtExpansion) -> PeriodicSystem:
    """The convergent-denominator system of sqrt(N): a_i = 1, b periodic."""
    d = expansion.d
    return PeriodicSystem(d=d, a=(1,) * d, b=expansion.period, b0=expansion.a0, strict=True)


def _solution_index(d: int, k: int) -> int:
    """Continuant index of the k-th Pell solution (k >= 1)."""
    return k * d - 1 if d % 2 == 0 else 2 * k * d - 1


def pell_fundamental(n: int) -> PellSolution:
    """Minimal (x, y) with x^2 - N y^2 = 1, from the period-boundary convergent."""
    return pell_solutions(n, 1)[0]


def pell_solutions(n: int, count: int) -> list[PellSolution]:
    """The first `count` solutions, extracted from continuants at multiples
    of the (possibly doubled) period."""
    if count < 1:
        raise ValueError("count must be >= 1")
    expansion = expand_sqrt(n)
    system = to_system(expansion)
    out = []
    for k in range(1, count + 1):
        idx = _solution_index(expansion.d, k)
        x, y = continuant_pair(system, idx)
        out.append(PellSolution(x, y, n))
    return out
