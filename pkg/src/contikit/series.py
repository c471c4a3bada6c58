"""Verification of the catalogued series closed forms.

Partial sums are accumulated exactly in rationals whenever the terms are
rational (the reciprocal/telescoping families) and in guarded high-precision
arithmetic for the arctan/artanh and zeta-style families.  Closed forms are
evaluated from exact quadratic-field data; only the final comparison is
approximate, at an explicit tolerance 10^-(digits-5).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .continuants import b_sequence
from .errors import (
    HypothesisViolated,
    NoAdmissibleRoot,
    PoleAtRoot,
    PrecisionExhausted,
)
from .pell import expand_sqrt, pell_solutions, to_system
from .quadratic import QuadraticNumber
from .recurrence import ReducedRecurrence, reduce, roots
from .systems import PeriodicSystem


@dataclass(frozen=True)
class PrecisionContext:
    digits: int = 50
    max_terms: int = 60

    def __post_init__(self):
        if self.digits < 20:
            raise ValueError("need at least 20 working digits")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")

    @property
    def tolerance(self) -> mpmath.mpf:
        with mpmath.workdps(self.digits + 10):
            return mpmath.mpf(10) ** (-(self.digits - 5))


@dataclass
class SeriesReport:
    family: str
    partial_sum: str
    closed_form: str
    closed_symbolic: str
    abs_error: str
    terms: int
    converged: bool
    partial_exact: Fraction | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "family": self.family,
            "partial": self.partial_sum,
            "closed": self.closed_form,
            "closed_symbolic": self.closed_symbolic,
            "abs_error": self.abs_error,
            "terms": self.terms,
            "converged": self.converged,
        }
        out.update(self.extras)
        return out


TELESCOPING_FAMILIES = (
    "millin", "period_reciprocal", "pell_y", "pell_x", "pell_y2", "arctan", "artanh",
)
ZETA_KINDS = ("pi_over_6", "pi_over_8", "ln3", "ln2")


def _report(family: str, partial, closed, symbolic: str, terms: int,
            ctx: PrecisionContext, partial_exact: Fraction | None = None,
            extras: dict | None = None) -> SeriesReport:
    with mpmath.workdps(ctx.digits + 10):
        if isinstance(partial, Fraction):
            partial = _frac_to_mpf(partial)
        err = abs(mpmath.mpf(partial) - closed)
        return SeriesReport(
            family=family,
            partial_sum=mpmath.nstr(mpmath.mpf(partial), ctx.digits),
            closed_form=mpmath.nstr(mpmath.mpf(closed), ctx.digits),
            closed_symbolic=symbolic,
            abs_error=mpmath.nstr(err, 10),
            terms=terms,
            converged=bool(err <= ctx.tolerance),
            partial_exact=partial_exact,
            extras=extras or {},
        )


def _frac_to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def _sum_rational_terms(terms_iter, ctx: PrecisionContext) -> tuple[Fraction, int]:
    """Accumulate exact rational terms until they drop below tolerance."""
    total = Fraction(0)
    count = 0
    with mpmath.workdps(ctx.digits + 10):
        tol = ctx.tolerance / 4
        for term in terms_iter:
            total += term
            count += 1
            if abs(_frac_to_mpf(term)) < tol:
                return total, count
            if count >= ctx.max_terms:
                raise PrecisionExhausted(
                    f"{count} terms did not reach the tolerance 10^-{ctx.digits - 5}")
    raise PrecisionExhausted("term stream exhausted before reaching tolerance")


def telescoping_sum(system_or_n, family: str, ctx: PrecisionContext | None = None) -> SeriesReport:
    """Verify one telescoping family against its closed form.

    `system_or_n` is a PeriodicSystem for millin/period_reciprocal/arctan/
    artanh and a non-square integer N for the pell_* families.
    """
    ctx = ctx or PrecisionContext()
    if family not in TELESCOPING_FAMILIES:
        raise ValueError(f"unknown family {family!r}")

    if family.startswith("pell_"):
        if not isinstance(system_or_n, int):
            raise HypothesisViolated(f"{family} expects an integer N")
        return _pell_sum(system_or_n, family, ctx)

    system: PeriodicSystem = system_or_n
    reduced = reduce(system)
    if reduced.delta <= 0:
        raise HypothesisViolated("telescoping sums require Delta > 0")
    alpha, beta = roots(reduced)
    d = system.d

    if family == "millin":
        if d != 2:
            raise HypothesisViolated("millin analogue requires d = 2")
        a1a2 = system.a[0] * system.a[1]
        # The B index doubles per term; extend the sequence lazily and cap
        # the index budget rather than relying on max_terms alone.
        n_cap = min(ctx.max_terms, 14)
        seq = [0, 1]  # B_{-1}, B_0, ...

        def _terms():
            for n in range(1, n_cap + 1):
                idx = 2 ** (n + 1) - 1
                while len(seq) < idx + 2:
                    k = len(seq) - 1
                    seq.append(system.coeff_b(k) * seq[-1] + system.coeff_a(k) * seq[-2])
                yield Fraction(a1a2) ** (2 ** (n - 1)) / seq[idx + 1]

        total, count = _sum_rational_terms(_terms(), ctx)
        closed = 1 / (system.b[0] * beta)
        return _report(family, total, closed.mpf(ctx.digits + 10),
                       f"1/(b1*beta) = {closed}", count, ctx, total)

    if family == "period_reciprocal":
        seq = b_sequence(system, (ctx.max_terms + 2) * d)
        B = lambda nu: seq[nu + 1]
        terms = (Fraction((-reduced.Dd) ** (n - 1), B(n * d - 1) * B((n + 1) * d - 1))
                 for n in range(1, ctx.max_terms + 1))
        total, count = _sum_rational_terms(terms, ctx)
        closed = alpha / QuadraticNumber.rational(B(d - 1) ** 2, reduced.delta)
        return _report(family, total, closed.mpf(ctx.digits + 10),
                       f"alpha/B_(d-1)^2 = {closed}", count, ctx, total)

    if reduced.Dd != 1:
        raise HypothesisViolated(f"{family} requires D_d = 1")
    seq = b_sequence(system, (2 * ctx.max_terms + 4) * d)
    B = lambda nu: seq[nu + 1]
    with mpmath.workdps(ctx.digits + 10):
        total = mpmath.mpf(0)
        count = 0
        tol = ctx.tolerance / 4
        if family == "arctan":
            closed = mpmath.atan(mpmath.mpf(B(d - 1)) / B(2 * d - 1))
            symbolic = f"arctan({B(d - 1)}/{B(2 * d - 1)})"
            terms = (mpmath.atan(mpmath.mpf(B(2 * d - 1)) / B((2 * n + 1) * d - 1))
                     for n in range(1, ctx.max_terms + 1))
        else:
            closed = mpmath.log(mpmath.mpf(B(3 * d - 1) + B(d - 1)) / (B(3 * d - 1) - B(d - 1))) / 2
            symbolic = f"ln(({B(3 * d - 1)}+{B(d - 1)})/({B(3 * d - 1)}-{B(d - 1)}))/2"
            terms = (mpmath.atanh(mpmath.mpf(B(2 * d - 1)) / B(2 * n * d - 1))
                     for n in range(2, ctx.max_terms + 2))
        for term in terms:
            total += term
            count += 1
            if abs(term) < tol:
                break
        else:
            raise PrecisionExhausted(f"{count} terms did not reach tolerance")
        return _report(family, total, closed, symbolic, count, ctx)


def _pell_sum(n: int, family: str, ctx: PrecisionContext) -> SeriesReport:
    expansion = expand_sqrt(n)
    if expansion.d % 2 != 0:
        raise HypothesisViolated(f"{family} requires an even period; sqrt({n}) has d={expansion.d}")
    # Solutions must reach beyond the last term used: y_{2n+1} for pell_y2.
    sols = pell_solutions(n, 2 * ctx.max_terms + 1)
    x = [None] + [s.x for s in sols]
    y = [None] + [s.y for s in sols]
    x1, y1 = x[1], y[1]
    delta = x1 * x1 - 1  # = N * y1^2

    if family == "pell_y":
        terms = (Fraction(1, y[k] * y[k + 1]) for k in range(1, ctx.max_terms))
        closed = QuadraticNumber(Fraction(x1, y1 * y1), Fraction(-1, y1 * y1), delta)
        symbolic = f"(x1 - sqrt(x1^2-1))/y1^2 = {closed}"
    elif family == "pell_x":
        terms = (Fraction(1, x[k] * x[k + 1]) for k in range(1, ctx.max_terms))
        closed = (QuadraticNumber(Fraction(x1), Fraction(-1), delta)
                  / QuadraticNumber(Fraction(0), Fraction(x1), delta))
        symbolic = f"(x1 - sqrt(x1^2-1))/(x1*sqrt(x1^2-1)) = {closed}"
    else:  # pell_y2
        terms = (Fraction(y[2 * k + 1], y[k] ** 2 * y[k + 1] ** 2)
                 for k in range(1, ctx.max_terms))
        closed = QuadraticNumber.rational(Fraction(1, y1 ** 3), delta)
        symbolic = f"1/y1^3 = {closed}"
    total, count = _sum_rational_terms(terms, ctx)
    return _report(family, total, closed.mpf(ctx.digits + 10), symbolic, count, ctx, total)


def zeta_series(system: PeriodicSystem, kind: str, ctx: PrecisionContext | None = None,
                compare_zeta=None) -> SeriesReport:
    """Sum the odd-index power series at the admissible quadratic root.

    kind selects the quadratic and target:
      pi_over_6: D z^2 - sqrt(3 Delta) z - 1 = 0,          target pi B_(d-1) / (6 sqrt(Delta))
      pi_over_8: D z^2 - (sqrt(2)-1) sqrt(Delta) z - 1 = 0, target pi B_(d-1) / (8 sqrt(Delta))
      ln3:       D z^2 + 2 sqrt(Delta) z + 1 = 0,          target B_(d-1) ln 3 / (2 sqrt(Delta))
      ln2:       D z^2 + 3 sqrt(Delta) z + 1 = 0,          target B_(d-1) ln 2 / (2 sqrt(Delta))

    If compare_zeta is given (a number), the same summation is additionally
    evaluated at that value and its residual is reported in extras.
    """
    ctx = ctx or PrecisionContext()
    if kind not in ZETA_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    reduced = reduce(system)
    if reduced.delta <= 0:
        raise HypothesisViolated("requires Delta > 0")
    alpha, _ = roots(reduced)
    d = system.d
    seq = b_sequence(system, (2 * ctx.max_terms + 1) * d)
    B = lambda nu: seq[nu + 1]

    with mpmath.workdps(ctx.digits + 10):
        sd = mpmath.sqrt(reduced.delta)
        if kind == "pi_over_6":
            lin, const = -mpmath.sqrt(3) * sd, -1
            target = mpmath.pi * B(d - 1) / (6 * sd)
            symbolic = f"pi*{B(d - 1)}/(6*sqrt({reduced.delta}))"
        elif kind == "pi_over_8":
            lin, const = -(mpmath.sqrt(2) + 1) * sd, -1
            target = mpmath.pi * B(d - 1) / (8 * sd)
            symbolic = f"pi*{B(d - 1)}/(8*sqrt({reduced.delta}))"
        elif kind == "ln3":
            lin, const = 2 * sd, 1
            target = B(d - 1) * mpmath.log(3) / (2 * sd)
            symbolic = f"{B(d - 1)}*ln(3)/(2*sqrt({reduced.delta}))"
        else:
            lin, const = 3 * sd, 1
            target = B(d - 1) * mpmath.log(2) / (2 * sd)
            symbolic = f"{B(d - 1)}*ln(2)/(2*sqrt({reduced.delta}))"

        # Roots of D z^2 + lin z + const = 0.
        disc = lin * lin - 4 * reduced.Dd * const
        if disc < 0:
            raise NoAdmissibleRoot("complex roots")
        sq = mpmath.sqrt(disc)
        candidates = [(-lin + sq) / (2 * reduced.Dd), (-lin - sq) / (2 * reduced.Dd)]
        abs_alpha = abs(alpha.mpf(ctx.digits))
        admissible = [z for z in candidates if abs(z) < abs_alpha]
        if not admissible:
            raise NoAdmissibleRoot(
                f"no root of the {kind} quadratic has |zeta| < |alpha| = {abs_alpha}")
        zeta = min(admissible, key=abs)

        def summation(z) -> tuple[mpmath.mpf, int, mpmath.mpf]:
            total = mpmath.mpf(0)
            last = mpmath.mpf(0)
            tol = ctx.tolerance / 10
            count = 0
            for k in range(ctx.max_terms):
                term = mpmath.mpf(B((2 * k + 1) * d - 1)) / (2 * k + 1) * z ** (2 * k + 1)
                if kind in ("pi_over_6", "pi_over_8"):
                    term = term if k % 2 else -term  # (-1)^(k+1)
                else:
                    term = -term
                total += term
                last = abs(term)
                count = k + 1
                if last < tol:
                    break
            return total, count, last

        total, count, last = summation(zeta)
        extras = {"zeta": mpmath.nstr(zeta, ctx.digits)}
        if compare_zeta is not None:
            cz = mpmath.mpf(compare_zeta)
            alt_total, _, _ = summation(cz)
            extras["compare_zeta"] = mpmath.nstr(cz, ctx.digits)
            extras["compare_residual"] = mpmath.nstr(abs(alt_total - target), 10)
        report = _report(f"zeta_{kind}", total, target, symbolic, count, ctx, extras=extras)
        # Term count is driven by the geometric decay of |zeta*beta|; the
        # series counts as converged once the residual is inside the tail
        # bound implied by the last summed term (or the hard tolerance).
        with mpmath.workdps(ctx.digits + 10):
            err = abs(total - target)
            report.converged = bool(err <= ctx.tolerance or err <= 4 * last)
        return report


@dataclass(frozen=True)
class ExactSumReport:
    kind: str
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def weighted_sum_exact(system: PeriodicSystem, kind: str, *, x: Fraction | int | None = None,
                       big_n: int = 1, r: int = -1) -> ExactSumReport:
    """Exact finite sums: geometric-weighted and binomial-transform forms.

    geometric: sum_{n=1..N} x^n B_{nd+r} against the closed form with
    denominator (x - alpha)(x - beta) = x^2 + (C/D) x - 1/D.
    binomial: sum_{n=1..N} C(N,n) (-1)^n (alpha+beta)^n B_{nd-1} = B_{2Nd-1}/D^N.
    """
    if big_n < 1:
        raise ValueError("N must be >= 1")
    reduced = reduce(system)
    d = system.d
    C, D = reduced.Cd, reduced.Dd

    if kind == "geometric":
        if r < -1:
            raise ValueError("r must be >= -1")
        xf = Fraction(x)
        denom = xf * xf + Fraction(C, D) * xf - Fraction(1, D)
        if denom == 0:
            raise PoleAtRoot(f"x = {xf} is a root of D x^2 - C x - 1")
        seq = b_sequence(system, (big_n + 1) * d + r)
        B = lambda nu: seq[nu + 1]
        lhs = sum((xf ** n) * B(n * d + r) for n in range(1, big_n + 1))
        numer = xf ** (big_n + 1) * (Fraction(B((big_n + 1) * d + r), D) + xf * B(big_n * d + r)) \
            - xf * (Fraction(B(d + r), D) + xf * B(r))
        return ExactSumReport(kind, Fraction(lhs), numer / denom)

    if kind == "binomial":
        seq = b_sequence(system, 2 * big_n * d)
        B = lambda nu: seq[nu + 1]
        s = Fraction(-C, D)  # alpha + beta
        lhs = sum(math.comb(big_n, n) * (-1) ** n * s ** n * B(n * d - 1)
                  for n in range(1, big_n + 1))
        return ExactSumReport(kind, Fraction(lhs), Fraction(B(2 * big_n * d - 1), D ** big_n))

    raise ValueError(f"unknown kind {kind!r}")
