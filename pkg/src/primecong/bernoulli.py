"""Bernoulli numbers, Bernoulli polynomials and Faulhaber power sums.

Convention: ``B_1 = -1/2``, so that ``B_n(1) = B_n(0)`` for ``n >= 2`` and
``sum(k**n for k in range(1, r)) == (B_{n+1}(r) - B_{n+1}(0)) / (n + 1)``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import NamedTuple

from .exact import RationalLike, as_fraction
from .primes import is_prime


class BernoulliCache:
    """Memo of ``B_0 .. B_n`` grown on demand.

    Extension is serialised with a lock, so one cache can be shared by
    threads; readers only ever see a fully computed prefix.
    """

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        # Common denominator of every stored value, kept so that the
        # recurrence sums integers instead of fractions.
        self._lcm = 1
        self._lock = threading.Lock()

    @property
    def computed_up_to(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def extend(self, n: int) -> None:
        if n <= self.computed_up_to:
            return
        with self._lock:
            values = self._values
            while len(values) <= n:
                m = len(values)
                if m >= 3 and m % 2 == 1:
                    values.append(Fraction(0))
                    continue
                # sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m.
                L = self._lcm
                total = 0
                for k, b in enumerate(values):
                    if b:
                        total += math.comb(m + 1, k) * b.numerator * (L // b.denominator)
                b_m = Fraction(-total, L * (m + 1))
                values.append(b_m)
                self._lcm = math.lcm(L, b_m.denominator)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(f"Bernoulli index must be >= 0, got {n}")
        self.extend(n)
        return self._values[n]

    def common_denominator(self, n: int) -> int:
        """A multiple of the denominators of ``B_0 .. B_n``."""
        self.extend(n)
        return self._lcm


DEFAULT_CACHE = BernoulliCache()


class BernoulliPolynomialValue(NamedTuple):
    degree: int
    argument: Fraction
    value: Fraction


def bernoulli_number(n: int, cache: BernoulliCache | None = None) -> Fraction:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return (DEFAULT_CACHE if cache is None else cache)[n]


def bernoulli_polynomial(
    n: int, x: RationalLike, cache: BernoulliCache | None = None
) -> Fraction:
    """``B_n(x) = sum_k C(n, k) B_k x**(n-k)``, exactly."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    cache = DEFAULT_CACHE if cache is None else cache
    x = as_fraction(x)
    a, b = x.numerator, x.denominator
    L = cache.common_denominator(n)
    # Scale every term by L * b**n to sum integers.
    total = 0
    a_pow = 1
    b_pow = b**n
    for k in range(n, -1, -1):
        bk = cache[k]
        if bk:
            total += math.comb(n, k) * bk.numerator * (L // bk.denominator) * a_pow * b_pow
        a_pow *= a
        b_pow //= b
    return Fraction(total, L * b**n)


def bernoulli_polynomial_value(
    n: int, x: RationalLike, cache: BernoulliCache | None = None
) -> BernoulliPolynomialValue:
    x = as_fraction(x)
    return BernoulliPolynomialValue(n, x, bernoulli_polynomial(n, x, cache))


def faulhaber_sum(n: int, r: int, cache: BernoulliCache | None = None) -> Fraction:
    """``(B_{n+1}(r) - B_{n+1}(0)) / (n+1)``, which equals ``1**n + ... + (r-1)**n``."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    if r < 1:
        raise ValueError(f"upper bound must be >= 1, got {r}")
    return (bernoulli_polynomial(n + 1, r, cache) - bernoulli_number(n + 1, cache)) / (n + 1)


def reflection_check(n: int, x: RationalLike, cache: BernoulliCache | None = None) -> bool:
    """Whether ``B_n(-x) == B_n(x + 1)``; only meaningful for even ``n``."""
    if n < 0 or n % 2:
        raise ValueError(f"degree must be even and non-negative, got {n}")
    x = as_fraction(x)
    return bernoulli_polynomial(n, -x, cache) == bernoulli_polynomial(n, x + 1, cache)


def von_staudt_clausen_check(n: int, cache: BernoulliCache | None = None) -> bool:
    """Whether ``B_n + sum(1/q for primes q with (q-1) | n)`` is an integer."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    total = bernoulli_number(n, cache)
    for d in range(1, n + 1):
        if n % d == 0 and is_prime(d + 1):
            total += Fraction(1, d + 1)
    return total.denominator == 1
