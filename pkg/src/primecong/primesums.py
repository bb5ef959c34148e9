"""Prime floor sums: brute-force evaluators and their closed forms.

Brute evaluators use exact big-integer powers only; they are the reference
the closed forms and congruences are checked against, so they must not rely
on any of those identities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bernoulli import BernoulliCache, bernoulli_number, bernoulli_polynomial
from .exact import binomial, integer_kth_root, pow_integer
from .primes import is_prime


class FloorSumKind(enum.Enum):
    GRID = "grid"
    CUBE_ROOT = "cube_root"
    PARTIAL_FERMAT = "partial_fermat"
    S_Q = "S_q"
    T = "T"


@dataclass(frozen=True)
class SumEvaluation:
    kind: FloorSumKind
    p: int
    brute_value: int
    closed_value: Fraction | None = None
    q: int | None = None
    r: int | None = None

    @property
    def agree(self) -> bool | None:
        if self.closed_value is None:
            return None
        return self.closed_value == self.brute_value


def _require_prime(p: int, *, odd: bool = False) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if odd and p == 2:
        raise ValueError("p must be an odd prime")


def _require_odd_at_least_3(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"closed form needs odd p >= 3, got {p}")


def grid_sum(p: int) -> int:
    """``sum floor(i*j/p)`` over ``1 <= i, j <= p-1``."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return sum((i * j) // p for i in range(1, p) for j in range(1, p))


def grid_sum_closed(p: int) -> int:
    _require_odd_at_least_3(p)
    return (p - 2) * (p - 1) ** 2 // 4


def cube_root_sum(p: int) -> int:
    """``sum floor((k*p)**(1/3))`` for ``1 <= k <= (p-1)(p-2)``."""
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    return sum(integer_kth_root(k * p, 3) for k in range(1, (p - 1) * (p - 2) + 1))


def cube_root_sum_closed(p: int) -> int:
    _require_odd_at_least_3(p)
    return (3 * p - 5) * (p - 2) * (p - 1) // 4


def partial_fermat_sum(p: int, r: int) -> int:
    """``sum floor(k**p / p)`` for ``1 <= k <= p - r``."""
    _require_prime(p, odd=True)
    if not 1 <= r <= p - 1:
        raise ValueError(f"r must lie in [1, {p - 1}], got {r}")
    return sum(pow_integer(k, p) // p for k in range(1, p - r + 1))


def fermat_floor_identity_check(p: int) -> bool:
    """``floor(n**p / p) == (n**p - n) / p`` for every ``1 <= n <= p-1``."""
    _require_prime(p, odd=True)
    for n in range(1, p):
        power = pow_integer(n, p)
        if (power - n) % p or power // p != (power - n) // p:
            return False
    return True


def s_q_sum(p: int, q: int) -> int:
    """``sum floor(k**(2q+1) / p)`` for ``1 <= k <= p-1``."""
    _require_prime(p)
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    e = 2 * q + 1
    return sum(pow_integer(k, e) // p for k in range(1, p))


def t_sum(p: int) -> int:
    """The ``S_q`` sum at exponent ``2q+1 = p``."""
    _require_prime(p, odd=True)
    return s_q_sum(p, (p - 1) // 2)


def _require_closed_q(q: int) -> None:
    if q < 1:
        raise ValueError(f"closed forms are only supported for q >= 1, got {q}")


def s_q_closed_binomial(p: int, q: int, cache: BernoulliCache | None = None) -> Fraction:
    """Double binomial-sum closed form, evaluated term by term as printed.

    (p-1)(p^{2q}-1)/2
      + 1/2 sum_{r=1}^{2q} (-1)^r/(r+1) C(2q+1, r) sum_{l=0}^{r} C(r+1, l) B_l p^{2q+1-l}
    """
    _require_closed_q(q)
    total = Fraction(0)
    for r in range(1, 2 * q + 1):
        inner = sum(
            binomial(r + 1, l) * bernoulli_number(l, cache) * pow_integer(p, 2 * q + 1 - l)
            for l in range(r + 1)
        )
        total += Fraction((-1) ** r * binomial(2 * q + 1, r), r + 1) * inner
    return Fraction((p - 1) * (pow_integer(p, 2 * q) - 1), 2) + total / 2


def s_q_closed_polynomial(p: int, q: int, cache: BernoulliCache | None = None) -> Fraction:
    """Bernoulli-polynomial closed form of ``S_q(p)``."""
    _require_closed_q(q)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    n = 2 * q + 2
    upper = bernoulli_polynomial(n, p + 1, cache) - bernoulli_polynomial(n, 1, cache)
    lower = bernoulli_polynomial(n, p, cache) - bernoulli_polynomial(n, 0, cache)
    return (upper + lower) / (2 * p * n) - Fraction(pow_integer(p, 2 * q) + p - 1, 2)


def t_closed(p: int, cache: BernoulliCache | None = None) -> Fraction:
    """``T(p)`` from the degree ``p+1`` Bernoulli polynomials."""
    _require_prime(p, odd=True)
    return s_q_closed_polynomial(p, (p - 1) // 2, cache)


def s1_s2_s3_closed(p: int, q: int) -> Fraction:
    """Factored polynomials for ``S_1``, ``S_2`` and ``S_3``."""
    base = (p - 2) * (p - 1) * (p + 1)
    if q == 1:
        return Fraction(base, 4)
    if q == 2:
        return Fraction(base * (2 * p**2 - 2 * p + 3), 12)
    if q == 3:
        return Fraction(base * (3 * p**4 - 6 * p**3 + 5 * p**2 - 2 * p + 6), 24)
    raise ValueError(f"factored closed form only exists for q in {{1, 2, 3}}, got {q}")


def pairing_congruence_check(p: int) -> bool:
    """``p**2`` divides ``j**p + (p-j)**p`` for ``1 <= j <= (p-1)/2``."""
    _require_prime(p, odd=True)
    p2 = p * p
    return all(
        (pow_integer(j, p) + pow_integer(p - j, p)) % p2 == 0
        for j in range(1, (p - 1) // 2 + 1)
    )


def evaluate(
    kind: FloorSumKind | str,
    p: int,
    q: int | None = None,
    r: int | None = None,
    cache: BernoulliCache | None = None,
) -> SumEvaluation:
    """Brute value plus, where one exists, the closed value for ``kind``."""
    kind = FloorSumKind(kind)
    if kind is FloorSumKind.GRID:
        _require_prime(p)
        closed = grid_sum_closed(p) if p > 2 else None
        return SumEvaluation(kind, p, grid_sum(p), _frac(closed))
    if kind is FloorSumKind.CUBE_ROOT:
        _require_prime(p)
        closed = cube_root_sum_closed(p) if p > 2 else None
        return SumEvaluation(kind, p, cube_root_sum(p), _frac(closed))
    if kind is FloorSumKind.PARTIAL_FERMAT:
        if r is None:
            raise ValueError("partial_fermat needs r")
        return SumEvaluation(kind, p, partial_fermat_sum(p, r), r=r)
    if kind is FloorSumKind.S_Q:
        if q is None:
            raise ValueError("S_q needs q")
        closed = s_q_closed_polynomial(p, q, cache) if q >= 1 else None
        return SumEvaluation(kind, p, s_q_sum(p, q), closed, q=q)
    return SumEvaluation(kind, p, t_sum(p), t_closed(p, cache), q=(p - 1) // 2)


def _frac(value: int | None) -> Fraction | None:
    return None if value is None else Fraction(value)
