import math

import pytest

from contikit import (
    PerfectSquare,
    expand_sqrt,
    pell_fundamental,
    pell_solutions,
    to_system,
)
from contikit.suite import brute_force_pell


def test_expand_sqrt8():
    exp = expand_sqrt(8)
    assert (exp.a0, exp.period, exp.d) == (2, (1, 4), 2)
    assert str(exp) == "sqrt(8) = [2; (1,4)] period d=2"


def test_expand_sqrt2_and_13():
    assert expand_sqrt(2).period == (2,)
    exp13 = expand_sqrt(13)
    assert exp13.a0 == 3
    assert exp13.period == (1, 1, 1, 1, 6)
    assert exp13.d == 5


def test_expand_rejects_squares():
    for n in (0, 1, 4, 9, 49, 10000):
        with pytest.raises(PerfectSquare):
            expand_sqrt(n)


def test_period_ends_with_2a0():
    for n in range(2, 121):
        if math.isqrt(n) ** 2 == n:
            continue
        exp = expand_sqrt(n)
        assert exp.period[-1] == 2 * exp.a0
        assert all(q >= 1 for q in exp.period)


def test_to_system_matches_convergents():
    from contikit import continuant_pair
    exp = expand_sqrt(7)
    system = to_system(exp)
    assert system.b0 == exp.a0
    assert system.b == exp.period
    # Convergent A/B must satisfy the Pell identity at index d-1 (even d).
    a, b = continuant_pair(system, system.d - 1)
    assert a * a - 7 * b * b in (1, -1)


def test_fundamental_examples():
    assert (pell_fundamental(13).x, pell_fundamental(13).y) == (649, 180)
    assert (pell_fundamental(8).x, pell_fundamental(8).y) == (3, 1)
    assert (pell_fundamental(2).x, pell_fundamental(2).y) == (3, 2)


def test_fundamental_vs_brute_force():
    for n in range(2, 51):
        if math.isqrt(n) ** 2 == n:
            continue
        sol = pell_fundamental(n)
        brute = brute_force_pell(n, 10 ** 5)
        assert brute is not None
        assert (sol.x, sol.y) == brute


def test_solutions_satisfy_identity_and_grow():
    for n in (2, 8, 13, 19):
        sols = pell_solutions(n, 6)
        assert len(sols) == 6
        ys = [s.y for s in sols]
        assert ys == sorted(ys) and len(set(ys)) == 6
        for s in sols:
            assert s.x * s.x - n * s.y * s.y == 1


def test_solution_power_structure():
    # (x_k + y_k sqrt(n)) = (x_1 + y_1 sqrt(n))^k
    for n in (8, 13):
        sols = pell_solutions(n, 4)
        x1, y1 = sols[0].x, sols[0].y
        x, y = 1, 0
        for sol in sols:
            x, y = x * x1 + n * y * y1, x * y1 + y * x1
            assert (sol.x, sol.y) == (x, y)
