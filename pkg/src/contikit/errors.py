"""Exception types shared across the package."""


class ContikitError(Exception):
    """Base class for all library errors."""


class InvalidSystem(ContikitError):
    """A coefficient system violates its invariants."""


class IndexOutOfRange(ContikitError):
    """An index fell below the defined initial values."""


class DivisionByZero(ContikitError):
    """A required denominator (e.g. B_{d-1}) vanished."""


class DegenerateDiscriminant(ContikitError):
    """Delta = 0 (or the root-separation hypothesis fails)."""


class PerfectSquare(ContikitError):
    """sqrt(N) requested for a perfect square N."""


class NotAPerfectSquare(ContikitError):
    """An integer square root check failed where a perfect square was required."""


class HypothesisViolated(ContikitError):
    """A theorem's hypothesis (period parity, D_d = 1, ...) is not met."""


class PrecisionExhausted(ContikitError):
    """max_terms reached before the requested tolerance."""


class NoAdmissibleRoot(ContikitError):
    """Neither root of the series quadratic satisfies |zeta| < |alpha|."""


class PoleAtRoot(ContikitError):
    """The weighted-sum ratio x coincides with alpha or beta."""
