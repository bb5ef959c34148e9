"""Primality, prime ranges for sweeps, and factorials modulo m."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .exact import ResidueClass

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Witness sets that make Miller-Rabin deterministic below each bound.
_WITNESSES = (
    (3_215_031_751, (2, 3, 5, 7)),
    (1 << 64, (2, 325, 9375, 28178, 450775, 9780504, 1795265022)),
    (3_317_044_064_679_887_385_961_981, _SMALL_PRIMES),
)

MAX_DETERMINISTIC = _WITNESSES[-1][0]


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    a %= n
    if a == 0:
        return True
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin.

    Exact for every ``n`` below ``MAX_DETERMINISTIC`` (about 3.3e24);
    larger inputs raise ``ValueError`` rather than return a probable answer.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for bound, witnesses in _WITNESSES:
        if n < bound:
            return all(_strong_probable_prime(n, a, d, s) for a in witnesses)
    raise ValueError(f"{n} exceeds the deterministic primality bound")


@dataclass(frozen=True)
class PrimeRange:
    """Closed interval ``[lower, upper]`` iterated over its primes."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower < 2:
            raise ValueError(f"lower bound must be >= 2, got {self.lower}")
        if self.upper < self.lower:
            raise ValueError(
                f"upper bound {self.upper} below lower bound {self.lower}"
            )

    def __iter__(self) -> Iterator[int]:
        return (n for n in range(self.lower, self.upper + 1) if is_prime(n))


def primes_in(prime_range: PrimeRange) -> list[int]:
    return list(prime_range)


def factorial_mod(n: int, modulus: int) -> ResidueClass:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    acc = 1
    for k in range(2, n + 1):
        acc = acc * k % modulus
        if acc == 0:
            break
    return ResidueClass(acc % modulus, modulus)
