"""Exact computation and verification of prime floor sums and Bernoulli congruences."""

__version__ = "0.1.0"

from .bernoulli import (
    DEFAULT_CACHE,
    BernoulliCache,
    bernoulli_number,
    bernoulli_polynomial,
    faulhaber_sum,
    reflection_check,
    von_staudt_clausen_check,
)
from .congruences import (
    RPolicy,
    SweepReport,
    TheoremId,
    Verdict,
    sweep,
    verify,
)
from .exact import (
    VALUATION_INFINITY,
    NonInvertibleDenominatorError,
    ResidueClass,
    binomial,
    congruent,
    integer_kth_root,
    padic_valuation,
    pow_integer,
    rational_mod,
)
from .primes import PrimeRange, factorial_mod, is_prime, primes_in
from .primesums import (
    FloorSumKind,
    SumEvaluation,
    cube_root_sum,
    grid_sum,
    partial_fermat_sum,
    s_q_closed_binomial,
    s_q_closed_polynomial,
    s_q_sum,
    t_sum,
)
