"""contikit: exact arithmetic for periodic second-order recurrences.

Generalized continuants, reduced d-step recurrences and their closed forms,
Pell equations via continued fractions, series verification, and prime
divisibility machinery for the resulting integer sequences.
"""
from .continuants import (
    IDENTITIES,
    IdentityReport,
    b_sequence,
    continuant_determinant,
    continuant_matrix,
    continuant_pair,
    convergent,
    verify_identity,
)
from .divisibility import (
    ApparitionReport,
    CongruenceCase,
    PseudoprimeVerdict,
    RepetitionReport,
    congruence_suite,
    divisibility_check,
    jacobi,
    law_of_repetition_check,
    lucas_pseudoprime_test,
    pisano_bound,
    pisano_period,
    rank_of_apparition,
    strong_gcd_check,
)
from .errors import (
    ContikitError,
    DegenerateDiscriminant,
    DivisionByZero,
    HypothesisViolated,
    IndexOutOfRange,
    InvalidSystem,
    NoAdmissibleRoot,
    NotAPerfectSquare,
    PerfectSquare,
    PoleAtRoot,
    PrecisionExhausted,
)
from .pell import PellSolution, SqrtExpansion, expand_sqrt, pell_fundamental, pell_solutions, to_system
from .quadratic import QuadraticNumber
from .recurrence import (
    GFReport,
    ReducedRecurrence,
    RemarkReport,
    backward_sequence,
    binet,
    binet_negative,
    gf_verify,
    limit_ratio,
    reduce,
    remark_identities,
    roots,
    sqrt_step,
)
from .series import (
    TELESCOPING_FAMILIES,
    ZETA_KINDS,
    ExactSumReport,
    PrecisionContext,
    SeriesReport,
    telescoping_sum,
    weighted_sum_exact,
    zeta_series,
)
from .systems import FIB, S8, PeriodicSystem

__version__ = "0.1.0"
