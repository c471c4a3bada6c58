"""Reduction of a d-periodic system to a single second-order recurrence.

B_{nu+2d} = C_d B_{nu+d} + D_d B_nu with C_d = B_{2d-1}/B_{d-1} and
D_d = (-1)^{d-1} a_1...a_d, plus everything downstream of that reduction:
closed-form evaluation in Q(sqrt(Delta)), the generating-function check,
ratio limits, the square-root stepping identity and negative indices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .continuants import b_sequence, continuant_pair
from .errors import DegenerateDiscriminant, DivisionByZero, IndexOutOfRange, NotAPerfectSquare
from .quadratic import QuadraticNumber
from .systems import PeriodicSystem


@dataclass(frozen=True)
class ReducedRecurrence:
    Cd: int
    Dd: int

    @property
    def delta(self) -> int:
        return self.Cd * self.Cd + 4 * self.Dd


def reduce(system: PeriodicSystem, verify_up_to: int = 60) -> ReducedRecurrence:
    """Compute (C_d, D_d) and verify the reduction against the raw recurrence."""
    d = system.d
    seq = b_sequence(system, 2 * d + verify_up_to)
    B = lambda nu: seq[nu + 1]
    if B(d - 1) == 0:
        raise DivisionByZero("B_{d-1} = 0; the reduction divides by it")
    cd, rem = divmod(B(2 * d - 1), B(d - 1))
    if rem != 0:
        raise DivisionByZero("B_{d-1} does not divide B_{2d-1}")
    # Cross-check against the alternative form C_d = B_d + a_1 * B_{d-2,1}.
    alt = B(d) + system.coeff_a(1) * continuant_pair(system, d - 2, 1)[1]
    assert cd == alt, f"C_d mismatch: {cd} vs {alt}"
    dd = (-1) ** (d - 1)
    for x in system.a:
        dd *= x
    if system.strict:
        assert cd >= 0
    for nu in range(-1, verify_up_to + 1):
        assert B(nu + 2 * d) == cd * B(nu + d) + dd * B(nu), f"reduction fails at nu={nu}"
    return ReducedRecurrence(cd, dd)


def roots(reduced: ReducedRecurrence) -> tuple[QuadraticNumber, QuadraticNumber]:
    """alpha = (-C + sqrt(Delta))/(2D), beta = (-C - sqrt(Delta))/(2D)."""
    delta = reduced.delta
    if delta == 0:
        raise DegenerateDiscriminant("Delta = 0")
    if reduced.Dd == 0:
        raise DegenerateDiscriminant("D_d = 0")
    two_d = 2 * reduced.Dd
    alpha = QuadraticNumber(Fraction(-reduced.Cd, two_d), Fraction(1, two_d), delta)
    beta = QuadraticNumber(Fraction(-reduced.Cd, two_d), Fraction(-1, two_d), delta)
    return alpha, beta


def _lucas_u(reduced: ReducedRecurrence, n: int) -> Fraction:
    """(alpha^n - beta^n)/(alpha - beta) as an exact rational, n >= -1.

    U_{k+1} = -(C/D) U_k + (1/D) U_{k-1} with U_0 = 0, U_1 = 1; U_{-1} = D.
    """
    if n == -1:
        return Fraction(reduced.Dd)
    prev, cur = Fraction(reduced.Dd), Fraction(0)  # U_{-1}, U_0
    for _ in range(n):
        prev, cur = cur, Fraction(-reduced.Cd, reduced.Dd) * cur + Fraction(1, reduced.Dd) * prev
    return cur


def binet(system: PeriodicSystem, n: int, r: int, reduced: ReducedRecurrence | None = None) -> int:
    """B_{nd+r} via the closed form, evaluated in exact rational arithmetic."""
    if n < 0 or r < -1:
        raise IndexOutOfRange("binet requires n >= 0, r >= -1")
    reduced = reduced if reduced is not None else reduce(system)
    if reduced.delta == 0:
        raise DegenerateDiscriminant("Delta = 0")
    seq = b_sequence(system, system.d + r)
    b_r, b_dr = seq[r + 1], seq[system.d + r + 1]
    lead = Fraction(-reduced.Dd) ** (n - 1)
    value = lead * (_lucas_u(reduced, n) * b_dr - _lucas_u(reduced, n - 1) * b_r)
    assert value.denominator == 1, f"closed form did not produce an integer: {value}"
    return int(value)


def binet_negative(system: PeriodicSystem, n: int, r: int,
                   reduced: ReducedRecurrence | None = None) -> Fraction:
    """B_{-nd+r} via the negative-index closed form; exact rational.

    Satisfies (-D_d)^n B_{-nd-1} = -B_{nd-1} at r = -1.  Rationals appear
    when |a_nu| != 1, matching the backward recurrence
    B_{nu-2} = (B_nu - b_nu B_{nu-1}) / a_nu.
    """
    if n < 0 or r < -1:
        raise IndexOutOfRange("requires n >= 0, r >= -1")
    reduced = reduced if reduced is not None else reduce(system)
    if reduced.delta == 0:
        raise DegenerateDiscriminant("Delta = 0")
    seq = b_sequence(system, system.d + r)
    b_r, b_dr = seq[r + 1], seq[system.d + r + 1]
    return _lucas_u(reduced, n + 1) * b_r - _lucas_u(reduced, n) * b_dr / Fraction(-reduced.Dd)


def backward_sequence(system: PeriodicSystem, down_to: int) -> dict[int, Fraction]:
    """B_nu for nu in [down_to, 0] by running the recurrence backwards.

    The periodic coefficient lookup is extended to nu <= 0 via the mod-d
    rule; used as an independent oracle for binet_negative.
    """
    values: dict[int, Fraction] = {-1: Fraction(0), 0: Fraction(1)}
    for target in range(-2, down_to - 1, -1):
        nu = target + 2  # B_{nu-2} = (B_nu - b_nu B_{nu-1}) / a_nu
        b_nu = system.b[(nu - 1) % system.d]
        a_nu = system.coeff_a(nu)
        values[target] = (values[nu] - b_nu * values[target + 1]) / a_nu
    return values


@dataclass(frozen=True)
class GFReport:
    numerator: tuple[int, ...]   # coefficients of the expected numerator polynomial
    product: tuple[int, ...]     # (1 - C x^d - D x^{2d}) * partial series, truncated
    degree_checked: int

    @property
    def equal(self) -> bool:
        n = self.degree_checked + 1
        pad = lambda t: tuple(t[:n]) + (0,) * (n - len(t))
        return pad(self.numerator) == pad(self.product)


def gf_verify(system: PeriodicSystem, n_terms: int,
              reduced: ReducedRecurrence | None = None) -> GFReport:
    """Check (1 - C x^d - D x^{2d}) * sum B_n x^n against the numerator poly."""
    d = system.d
    if n_terms < 2 * d:
        raise IndexOutOfRange(f"need N >= 2d = {2 * d}, got {n_terms}")
    reduced = reduced if reduced is not None else reduce(system)
    seq = b_sequence(system, n_terms)[1:]  # B_0 .. B_N
    prod = [0] * (n_terms + 1)
    for i, bn in enumerate(seq):
        prod[i] += bn
        if i + d <= n_terms:
            prod[i + d] -= reduced.Cd * bn
        if i + 2 * d <= n_terms:
            prod[i + 2 * d] -= reduced.Dd * bn
    numer = [0] * (2 * d)
    for i in range(2 * d):
        numer[i] += seq[i]
    for i in range(d):
        numer[i + d] -= reduced.Cd * seq[i]
    deg = n_terms - 2 * d
    return GFReport(tuple(numer), tuple(prod[: deg + 1]), deg)


def sqrt_step(system: PeriodicSystem, n: int,
              reduced: ReducedRecurrence | None = None) -> int:
    """B_{(n+1)d-1} from B_{nd-1} via the square-root identity.

    radicand = Delta B_{nd-1}^2 + 4 (-D_d)^n B_{d-1}^2 must be a perfect
    square; NotAPerfectSquare is raised (never rounded) otherwise.
    """
    if n < 1:
        raise IndexOutOfRange("requires n >= 1")
    if not system.strict:
        raise IndexOutOfRange("square-root stepping assumes a strict system")
    d = system.d
    reduced = reduced if reduced is not None else reduce(system)
    seq = b_sequence(system, (n + 1) * d)
    B = lambda nu: seq[nu + 1]
    radicand = reduced.delta * B(n * d - 1) ** 2 + 4 * (-reduced.Dd) ** n * B(d - 1) ** 2
    if radicand < 0:
        raise NotAPerfectSquare(f"negative radicand {radicand}")
    root = math.isqrt(radicand)
    if root * root != radicand:
        raise NotAPerfectSquare(f"radicand {radicand} is not a perfect square")
    value, rem = divmod(reduced.Cd * B(n * d - 1) + root, 2)
    if rem != 0:
        raise NotAPerfectSquare("numerator is odd")
    assert value == B((n + 1) * d - 1), "square-root step disagrees with the recurrence"
    return value


def limit_ratio(system: PeriodicSystem, mode: str, r: int,
                reduced: ReducedRecurrence | None = None) -> QuadraticNumber:
    """Exact limit of B_{nd+r}/B_{nd+r-1} or B_{(n+1)d+r}/B_{nd+r}."""
    reduced = reduced if reduced is not None else reduce(system)
    if reduced.delta <= 0:
        raise DegenerateDiscriminant("limits require Delta > 0")
    if reduced.Cd == 0:
        raise DegenerateDiscriminant("|alpha| = |beta| when C_d = 0")
    _, beta = roots(reduced)
    seq = b_sequence(system, system.d + max(r, 0))
    B = lambda nu: QuadraticNumber.rational(seq[nu + 1], reduced.delta)
    if mode == "consecutive_terms":
        if r < 0:
            raise IndexOutOfRange("consecutive_terms requires r >= 0")
        return (beta * B(system.d + r) - B(r)) / (beta * B(system.d + r - 1) - B(r - 1))
    if mode == "consecutive_periods":
        if r < -1:
            raise IndexOutOfRange("consecutive_periods requires r >= -1")
        return -reduced.Dd * beta
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class RemarkReport:
    """Exact evaluations of the two squared-ratio identities.

    identity1 must hold.  identity2 is reported in both the printed form
    (squared right-hand side) and the corrected form; only the corrected
    form is expected to hold.
    """
    identity1_lhs: Fraction
    identity1_rhs: Fraction
    identity2_lhs: Fraction
    identity2_rhs_printed: Fraction
    identity2_rhs_corrected: Fraction

    @property
    def identity1_holds(self) -> bool:
        return self.identity1_lhs == self.identity1_rhs

    @property
    def identity2_corrected_holds(self) -> bool:
        return self.identity2_lhs == self.identity2_rhs_corrected

    @property
    def identity2_printed_holds(self) -> bool:
        return self.identity2_lhs == self.identity2_rhs_printed


def remark_identities(system: PeriodicSystem, n: int,
                      reduced: ReducedRecurrence | None = None) -> RemarkReport:
    if n < 1:
        raise IndexOutOfRange("requires n >= 1")
    d = system.d
    reduced = reduced if reduced is not None else reduce(system)
    seq = b_sequence(system, 4 * n * d)
    B = lambda nu: seq[nu + 1]
    for idx in (d - 1, n * d - 1, 2 * n * d - 1):
        if B(idx) == 0:
            raise DivisionByZero(f"B_{idx} = 0")
    sq = lambda x: Fraction(x) * x
    t1 = sq(B(2 * n * d - 1)) / sq(B(n * d - 1))
    t2 = reduced.delta * sq(B(n * d - 1)) / sq(B(d - 1))
    return RemarkReport(
        identity1_lhs=t1 - t2,
        identity1_rhs=Fraction(4 * (-reduced.Dd) ** n),
        identity2_lhs=t1 + t2,
        identity2_rhs_printed=2 * sq(B(4 * n * d - 1)) / sq(B(2 * n * d - 1)),
        identity2_rhs_corrected=2 * Fraction(B(4 * n * d - 1)) / B(2 * n * d - 1),
    )
