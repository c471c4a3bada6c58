import json
import random
from fractions import Fraction

import mpmath
import pytest

from contikit import (
    FIB,
    S8,
    HypothesisViolated,
    PoleAtRoot,
    PeriodicSystem,
    PrecisionContext,
    b_sequence,
    expand_sqrt,
    telescoping_sum,
    to_system,
    weighted_sum_exact,
    zeta_series,
)
from contikit.series import TELESCOPING_FAMILIES, ZETA_KINDS
from contikit.suite import random_strict_system


def test_millin_s8_exact_partial():
    # 1/6 + 1/204 + 1/235416 against the exact rational partial.
    seq = b_sequence(S8, 16)
    assert seq[4] == 6 and seq[8] == 204 and seq[16] == 235416
    rep = telescoping_sum(S8, "millin")
    assert rep.converged
    partial3 = Fraction(1, 6) + Fraction(1, 204) + Fraction(1, 235416)
    assert rep.partial_exact is not None
    with mpmath.workdps(60):
        closed = 3 - 2 * mpmath.sqrt(2)
        err3 = abs(mpmath.mpf(partial3.numerator) / partial3.denominator - closed)
        assert err3 < mpmath.mpf("1e-7")


def test_millin_requires_d2():
    with pytest.raises(HypothesisViolated):
        telescoping_sum(FIB, "millin")


def test_period_reciprocal_families():
    assert telescoping_sum(S8, "period_reciprocal").converged
    assert telescoping_sum(FIB, "period_reciprocal", PrecisionContext(25, 150)).converged


def test_pell_families_converge():
    for fam in ("pell_y", "pell_x", "pell_y2"):
        rep = telescoping_sum(8, fam)
        assert rep.converged, fam


def test_pell_families_need_even_period():
    with pytest.raises(HypothesisViolated):
        telescoping_sum(13, "pell_y")  # sqrt(13) has period 5


def test_arctan_artanh_sqrt2():
    system = to_system(expand_sqrt(2))
    ctx = PrecisionContext(40, 120)
    at = telescoping_sum(system, "arctan", ctx)
    ah = telescoping_sum(system, "artanh", ctx)
    assert at.converged and ah.converged
    with mpmath.workdps(50):
        assert abs(mpmath.mpf(at.closed_form) - mpmath.atan(mpmath.mpf(1) / 2)) < 1e-35
        assert abs(mpmath.mpf(ah.closed_form) - mpmath.log(mpmath.mpf(3) / 2) / 2) < 1e-35


def test_arctan_requires_unit_d():
    # S8 has D_2 = -1, so the D_d = 1 hypothesis fails.
    with pytest.raises(HypothesisViolated):
        telescoping_sum(S8, "arctan")
    with pytest.raises(HypothesisViolated):
        telescoping_sum(S8, "artanh")


def test_zeta_kinds_s8():
    for kind in ZETA_KINDS:
        rep = zeta_series(S8, kind, PrecisionContext(50, 60))
        assert rep.converged, kind
        with mpmath.workdps(60):
            zeta = mpmath.mpf(rep.extras["zeta"])
            assert abs(zeta) < mpmath.mpf("0.172")  # |alpha| for S8


def test_zeta_pi6_tolerance_and_compare():
    with mpmath.workdps(60):
        printed = 2 * mpmath.sqrt(6) - 5
    rep = zeta_series(S8, "pi_over_6", PrecisionContext(50, 40), compare_zeta=printed)
    with mpmath.workdps(60):
        assert mpmath.mpf(rep.abs_error) < mpmath.mpf("1e-20")
        assert mpmath.mpf(rep.extras["compare_residual"]) > mpmath.mpf("1e-3")
    assert rep.terms <= 40


def test_zeta_fib():
    rep = zeta_series(FIB, "pi_over_6", PrecisionContext(30, 200))
    assert rep.converged
    with mpmath.workdps(40):
        want = (mpmath.sqrt(15) - mpmath.sqrt(19)) / 2
        assert abs(mpmath.mpf(rep.extras["zeta"]) - want) < mpmath.mpf("1e-25")


def test_series_report_json():
    rep = telescoping_sum(S8, "millin")
    doc = rep.to_dict()
    for key in ("family", "partial", "closed", "closed_symbolic",
                "abs_error", "terms", "converged"):
        assert key in doc
    assert json.loads(json.dumps(doc)) == doc


def test_weighted_sums_s8():
    geo = weighted_sum_exact(S8, "geometric", x=1, big_n=2, r=-1)
    assert geo.equal and geo.lhs == 7
    bino = weighted_sum_exact(S8, "binomial", big_n=2)
    assert bino.equal and bino.lhs == 204


def test_weighted_sums_random():
    rng = random.Random(61)
    xs = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 4)]
    done = 0
    while done < 60:
        system = random_strict_system(rng)
        try:
            geo = weighted_sum_exact(system, "geometric", x=rng.choice(xs),
                                     big_n=rng.randint(1, 6), r=rng.choice([-1, 0, 1]))
        except PoleAtRoot:
            continue
        assert geo.equal
        assert weighted_sum_exact(system, "binomial", big_n=rng.randint(1, 6)).equal
        done += 1


def test_weighted_sum_pole():
    # d=1, a=(2), b=(1): C=1, D=2; alpha, beta are the roots of 2z^2 + z - 1,
    # i.e. 1/2 and -1, and the closed form has poles exactly there.
    system = PeriodicSystem(d=1, a=(2,), b=(1,))
    with pytest.raises(PoleAtRoot):
        weighted_sum_exact(system, "geometric", x=Fraction(1, 2), big_n=3)
    with pytest.raises(PoleAtRoot):
        weighted_sum_exact(system, "geometric", x=-1, big_n=3)


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        telescoping_sum(S8, "nope")
    with pytest.raises(ValueError):
        zeta_series(S8, "nope")
    assert set(TELESCOPING_FAMILIES) >= {"millin", "pell_y", "arctan", "artanh"}
