import math
import random

import pytest

from contikit import (
    FIB,
    S8,
    HypothesisViolated,
    PeriodicSystem,
    b_sequence,
    congruence_suite,
    divisibility_check,
    jacobi,
    law_of_repetition_check,
    lucas_pseudoprime_test,
    pisano_bound,
    pisano_period,
    rank_of_apparition,
    reduce,
    strong_gcd_check,
)
from contikit.divisibility import _is_prime, b_mod, b_stride_mod
from contikit.suite import random_strict_system

PRIMES_50 = [p for p in range(2, 51) if _is_prime(p)]


def test_jacobi_examples():
    assert jacobi(32, 35) == -1
    assert jacobi(32, 7) == 1
    assert jacobi(1, 9) == 1
    assert jacobi(0, 5) == 0
    with pytest.raises(ValueError):
        jacobi(3, 8)


def test_jacobi_euler_criterion():
    rng = random.Random(67)
    for p in [p for p in PRIMES_50 if p > 2]:
        for _ in range(10):
            a = rng.randint(0, 4 * p)
            euler = pow(a, (p - 1) // 2, p)
            assert jacobi(a, p) % p == euler


def test_jacobi_multiplicative():
    rng = random.Random(71)
    for _ in range(50):
        n = 2 * rng.randint(1, 200) + 1
        a, b = rng.randint(-100, 100), rng.randint(-100, 100)
        assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


def test_divisibility_sequence():
    rng = random.Random(73)
    for _ in range(20):
        system = random_strict_system(rng)
        for m in range(1, 7):
            for mult in range(2, 5):
                assert divisibility_check(system, m, m * mult)


def test_strong_gcd():
    seq = b_sequence(FIB, 20)
    assert math.gcd(seq[12], seq[18]) == 8  # gcd(F_12, F_18) = F_6 = 8
    assert strong_gcd_check(FIB, 12, 18)
    assert math.gcd(6, 35) == 1
    assert strong_gcd_check(S8, 2, 3)
    # Strong divisibility needs gcd(C_d, D_d) = 1, exactly as for classical
    # Lucas sequences; e.g. d=4, a=(3,2,6,1), b=(4,2,8,5), b0=3 has
    # gcd(C, D) = 4 and gcd(B'_7, B'_8) = 64 * B'_1.
    rng = random.Random(79)
    checked = 0
    while checked < 20:
        system = random_strict_system(rng)
        red = reduce(system)
        if math.gcd(red.Cd, red.Dd) != 1:
            continue
        m, n = rng.randint(1, 12), rng.randint(1, 12)
        assert strong_gcd_check(system, m, n)
        checked += 1


def test_congruence_suite_s8():
    assert congruence_suite(S8, 3, range(-1, 7)).all_pass
    assert congruence_suite(S8, 7, range(-1, 7)).all_pass
    assert congruence_suite(S8, 3).case_tag == "p|C,p~D"  # 3 | C = 6
    assert congruence_suite(S8, 7).case_tag == "QR"


def test_congruence_suite_random():
    rng = random.Random(83)
    for _ in range(25):
        system = random_strict_system(rng)
        for p in PRIMES_50:
            assert congruence_suite(system, p).all_pass, (system, p)


def test_congruence_rejects_composite():
    with pytest.raises(ValueError):
        congruence_suite(S8, 15)


def test_fermat_little_theorem_reduction():
    # d=1, a=(-a0), b=(a0+1): B_nu = (a0^(nu+1) - 1)/(a0 - 1), so the QR-case
    # congruence B_(p-2) = 0 (mod p) is exactly a0^(p-1) = 1 (mod p).
    for a0 in (2, 3, 5):
        system = PeriodicSystem(d=1, a=(-a0,), b=(a0 + 1,), strict=False)
        for p in PRIMES_50:
            if (a0 * (a0 - 1) * (a0 + 1)) % p == 0 or p == 2:
                continue
            case = congruence_suite(system, p)
            assert case.all_pass, (a0, p)
            seq = b_mod(system, p - 2, p)
            assert seq[p - 1] == 0  # B_(p-2) mod p
            assert pow(a0, p - 1, p) == 1


def test_rank_of_apparition_examples():
    rep3 = rank_of_apparition(S8, 3)
    rep7 = rank_of_apparition(S8, 7)
    assert rep3.omega == 2 and rep3.clause_holds
    assert rep7.omega == 3 and rep7.clause_holds
    absent = rank_of_apparition(PeriodicSystem(d=1, a=(2,), b=(1,)), 2)
    assert absent.omega is None and absent.clause_holds


def test_rank_of_apparition_random():
    rng = random.Random(89)
    primes = [p for p in range(2, 101) if _is_prime(p)]
    for _ in range(15):
        system = random_strict_system(rng)
        for p in primes:
            assert rank_of_apparition(system, p).clause_holds, (system, p)


def test_pisano_s8():
    assert pisano_period(S8, 3) == 8
    assert pisano_period(S8, 7) == 6
    assert pisano_bound(S8, 3) == 8
    assert pisano_bound(S8, 7) == 12
    # The catalogued mod-7 congruence B_(r+12) = B_r holds (12 = 2 * 6).
    seq = [x % 7 for x in b_sequence(S8, 40)]
    assert all(seq[i + 12] == seq[i] for i in range(len(seq) - 12))


def test_pisano_fib():
    assert pisano_period(FIB, 5) == 20
    assert pisano_bound(FIB, 5) == 20


def test_pisano_divides_bound():
    rng = random.Random(97)
    primes = [p for p in range(3, 31) if _is_prime(p)]
    for _ in range(12):
        system = random_strict_system(rng, d_max=3, coeff_max=6)
        red = reduce(system)
        for p in primes:
            if red.Dd % p == 0:
                with pytest.raises(HypothesisViolated):
                    pisano_period(system, p)
                continue
            pi = pisano_period(system, p)
            assert pisano_bound(system, p) % pi == 0
            # Independent check: the sequence really repeats with period pi.
            seq = b_mod(system, 3 * pi + 2 * system.d, p)
            assert all(seq[i + pi] == seq[i] for i in range(len(seq) - pi))


def test_pseudoprime_s8_35():
    verdict = lucas_pseudoprime_test(S8, 35)
    assert verdict.verdict == "probable_prime"
    assert verdict.epsilon == -1
    assert verdict.tested_index == 71
    assert not _is_prime(35)  # 35 is a genuine Lucas pseudoprime here
    assert verdict.to_dict() == {"n": "35", "epsilon": -1, "index": "71",
                                 "verdict": "probable_prime"}


def test_pseudoprime_soundness():
    rng = random.Random(101)
    systems = [S8] + [random_strict_system(rng) for _ in range(20)]
    primes = [p for p in range(3, 201) if _is_prime(p)]
    for system in systems:
        red = reduce(system)
        for p in primes:
            if math.gcd(p, red.Cd * red.Dd * red.delta) > 1:
                continue
            assert lucas_pseudoprime_test(system, p, red).verdict == "probable_prime"


def test_pseudoprime_detects_composites():
    red = reduce(S8)
    verdicts = {}
    for n in range(9, 201, 2):
        if _is_prime(n):
            continue
        verdicts[n] = lucas_pseudoprime_test(S8, n, red).verdict
    assert "composite_proven" in verdicts.values()
    # Any composite_proven verdict must name a true composite (always here),
    # and no tested n was prime, so probable_prime entries are pseudoprimes.
    assert verdicts[35] == "probable_prime"
    assert verdicts[9] == "inapplicable"  # gcd(9, C*D*Delta) = 3


def test_modular_agrees_with_full():
    rng = random.Random(103)
    for _ in range(10):
        system = random_strict_system(rng)
        m = rng.randint(2, 1000)
        full = [x % m for x in b_sequence(system, 500)]
        assert b_mod(system, 500, m) == full
        red = reduce(system)
        k_max = 500 // system.d
        stride = b_stride_mod(system, k_max, m, red)
        for k in range(k_max + 1):
            assert stride[k] == full[k * system.d]


def test_law_of_repetition():
    r1 = law_of_repetition_check(FIB, 5, 5, 1, 1)
    assert r1.e == 1 and r1.observed == 2 and r1.exact_expected and r1.holds
    r2 = law_of_repetition_check(FIB, 5, 5, 2, 0)
    assert r2.observed == 1 and r2.holds
    r3 = law_of_repetition_check(S8, 3, 2, 1, 1)
    assert r3.e == 1 and r3.observed == 2 and r3.exact_expected and r3.holds


def test_law_of_repetition_rejects():
    with pytest.raises(ValueError):
        law_of_repetition_check(FIB, 5, 5, 5, 1)  # p | m
    with pytest.raises(ValueError):
        law_of_repetition_check(FIB, 5, 4, 1, 1)  # 5 does not divide F_4 = 3
