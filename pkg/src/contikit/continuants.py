"""Generalized continuants A_{nu,lambda}, B_{nu,lambda} and their identities.

Three independent computation paths are provided: the three-term forward
recurrence, a 2x2 matrix product, and an exact determinant of the explicit
tridiagonal matrix.  All values are exact Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange
from .systems import PeriodicSystem


def continuant_pair(system: PeriodicSystem, nu: int, lam: int = 0) -> tuple[int, int]:
    """Return (A_{nu,lam}, B_{nu,lam}) by the forward recurrence.

    Initial values: A_{-1,lam} = 1, A_{0,lam} = b_lam and
    B_{-1,lam} = 0, B_{0,lam} = 1; then
    X_{k,lam} = b_{lam+k} X_{k-1,lam} + a_{lam+k} X_{k-2,lam}.
    """
    if nu < -1:
        raise IndexOutOfRange(f"nu must be >= -1, got {nu}")
    if lam < 0:
        raise IndexOutOfRange(f"lambda must be >= 0, got {lam}")
    a_prev, a_cur = 1, system.coeff_b(lam)  # A_{-1}, A_0
    b_prev, b_cur = 0, 1                    # B_{-1}, B_0
    if nu == -1:
        return a_prev, b_prev
    for k in range(1, nu + 1):
        bk = system.coeff_b(lam + k)
        ak = system.coeff_a(lam + k)
        a_prev, a_cur = a_cur, bk * a_cur + ak * a_prev
        b_prev, b_cur = b_cur, bk * b_cur + ak * b_prev
    return a_cur, b_cur


def b_sequence(system: PeriodicSystem, nu_max: int, lam: int = 0) -> list[int]:
    """B_{-1,lam} .. B_{nu_max,lam} as a list (index i holds B_{i-1,lam})."""
    if nu_max < -1:
        raise IndexOutOfRange(f"nu_max must be >= -1, got {nu_max}")
    seq = [0, 1]
    for k in range(1, nu_max + 1):
        seq.append(system.coeff_b(lam + k) * seq[-1] + system.coeff_a(lam + k) * seq[-2])
    return seq[: nu_max + 2]


def continuant_matrix(system: PeriodicSystem, nu: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """(1 1; 1 0) * prod_{j=1..nu} (b_j 1; a_j 0).

    The leading factor encodes b_0 = 1, so system.b0 is deliberately ignored
    here; rows are (A_nu, A_{nu-1}) and (B_nu, B_{nu-1}) under that
    convention.
    """
    if nu < 0:
        raise IndexOutOfRange(f"nu must be >= 0, got {nu}")
    m = ((1, 1), (1, 0))
    for j in range(1, nu + 1):
        bj, aj = system.coeff_b(j), system.coeff_a(j)
        m = (
            (m[0][0] * bj + m[0][1] * aj, m[0][0]),
            (m[1][0] * bj + m[1][1] * aj, m[1][0]),
        )
    return m


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact determinant via fraction-free Gaussian elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _tridiagonal(system: PeriodicSystem, lo: int, hi: int) -> list[list[int]]:
    """Matrix with diagonal b_lo..b_hi, superdiagonal -1, subdiagonal a_{lo+1}.."""
    n = hi - lo + 1
    mat = [[0] * n for _ in range(n)]
    for i in range(n):
        mat[i][i] = system.coeff_b(lo + i)
        if i + 1 < n:
            mat[i][i + 1] = -1
            mat[i + 1][i] = system.coeff_a(lo + i + 1)
    return mat


def continuant_determinant(system: PeriodicSystem, nu: int) -> tuple[int, int]:
    """(A_nu, B_nu) as determinants of explicit tridiagonal matrices.

    Independent oracle for continuant_pair: the matrices are built entry by
    entry and reduced by an exact general-purpose determinant, not by the
    three-term recurrence.
    """
    if nu < 0:
        raise IndexOutOfRange(f"nu must be >= 0, got {nu}")
    a_val = _bareiss_det(_tridiagonal(system, 0, nu))
    b_val = _bareiss_det(_tridiagonal(system, 1, nu)) if nu >= 1 else 1
    return a_val, b_val


def convergent(system: PeriodicSystem, nu: int, lam: int = 0) -> Fraction:
    """Depth-nu truncation of the continued fraction, bottom-up in rationals."""
    if nu < 0:
        raise IndexOutOfRange(f"nu must be >= 0, got {nu}")
    value = Fraction(system.coeff_b(lam + nu))
    for k in range(nu - 1, -1, -1):
        value = system.coeff_b(lam + k) + Fraction(system.coeff_a(lam + k + 1)) / value
    return value


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: tuple[int, ...]
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


IDENTITIES = ("cassini_A", "cassini_B", "catalan", "docagne", "index_changing", "telescoping")


def _sign(k: int) -> int:
    """(-1)**k as an int, valid for negative k too."""
    return -1 if k % 2 else 1


def _a_product(system: PeriodicSystem, lo: int, hi: int) -> int:
    """a_lo * a_{lo+1} * ... * a_hi (empty product = 1)."""
    prod = 1
    for i in range(lo, hi + 1):
        prod *= system.coeff_a(i)
    return prod


def verify_identity(system: PeriodicSystem, identity: str, params: tuple[int, ...]) -> IdentityReport:
    """Evaluate both sides of one of the catalogued identities exactly.

    Parameter conventions:
      cassini_A / cassini_B: params = (lam, nu, mu), all >= 0
      catalan:               params = (lam, nu)
      docagne:               params = (lam, nu) with lam >= nu
      index_changing:        params = (lam, nu) with nu >= 1
      telescoping:           params = (lam, nu) with lam >= nu, d | (lam - nu)
    """
    A = lambda n, l=0: continuant_pair(system, n, l)[0]
    B = lambda n, l=0: continuant_pair(system, n, l)[1]

    if identity in ("cassini_A", "cassini_B"):
        lam, nu, mu = params
        if min(lam, nu, mu) < 0:
            raise IndexOutOfRange("cassini requires lam, nu, mu >= 0")
        X = A if identity == "cassini_A" else B
        lhs = X(nu + lam + mu - 1) * B(nu - 1, lam)
        rhs = (
            X(nu + lam - 1) * B(nu + mu - 1, lam)
            + _sign(nu - 1) * _a_product(system, lam + 1, lam + nu) * X(lam - 1) * B(mu - 1, nu + lam)
        )
        return IdentityReport(identity, tuple(params), (lhs,), (rhs,))

    if identity == "catalan":
        lam, nu = params
        if lam < 0 or nu < 0:
            raise IndexOutOfRange("catalan requires lam, nu >= 0")
        a1 = system.coeff_a(lam + 1)
        lhs = (A(nu + lam), B(nu + lam))
        rhs = (
            A(lam) * B(nu, lam) + a1 * A(lam - 1) * B(nu - 1, lam + 1),
            B(lam) * B(nu, lam) + a1 * B(lam - 1) * B(nu - 1, lam + 1),
        )
        return IdentityReport(identity, tuple(params), lhs, rhs)

    if identity == "docagne":
        lam, nu = params
        if nu < 0 or lam < nu:
            raise IndexOutOfRange("docagne requires 0 <= nu <= lam")
        prod = _sign(nu - 1) * _a_product(system, lam - nu + 1, lam)
        lhs = (A(lam) * B(nu - 1, lam - nu), B(lam) * B(nu - 1, lam - nu))
        rhs = (
            A(lam - 1) * B(nu, lam - nu) + prod * A(lam - nu - 1),
            B(lam - 1) * B(nu, lam - nu) + prod * B(lam - nu - 1),
        )
        return IdentityReport(identity, tuple(params), lhs, rhs)

    if identity == "index_changing":
        lam, nu = params
        if lam < 0 or nu < 1:
            raise IndexOutOfRange("index_changing requires lam >= 0, nu >= 1")
        lhs = (A(nu, lam), B(nu, lam))
        rhs = (
            system.coeff_b(lam) * A(nu - 1, lam + 1) + system.coeff_a(lam + 1) * A(nu - 2, lam + 2),
            system.coeff_b(lam + 1) * B(nu - 1, lam + 1) + system.coeff_a(lam + 2) * B(nu - 2, lam + 2),
        )
        return IdentityReport(identity, tuple(params), lhs, rhs)

    if identity == "telescoping":
        lam, nu = params
        if nu < 0 or lam < nu:
            raise IndexOutOfRange("telescoping requires 0 <= nu <= lam")
        if (lam - nu) % system.d != 0:
            raise IndexOutOfRange("telescoping requires d | (lam - nu)")
        prod = _sign(nu) * _a_product(system, lam - nu + 1, lam)
        lhs = (A(lam - 1) * B(nu) - A(lam) * B(nu - 1), B(lam - 1) * B(nu) - B(lam) * B(nu - 1))
        rhs = (prod * A(lam - nu - 1), prod * B(lam - nu - 1))
        return IdentityReport(identity, tuple(params), lhs, rhs)

    raise ValueError(f"unknown identity {identity!r}; expected one of {IDENTITIES}")
