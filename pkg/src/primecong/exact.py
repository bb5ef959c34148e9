"""Exact integer/rational helpers and congruences between rationals.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`
(always in lowest terms with a positive denominator). A rational ``a`` is
congruent to ``b`` modulo ``m`` when ``m`` divides the numerator of ``a - b``;
this is only defined when both denominators are coprime to ``m``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

_INTEGER_RE = re.compile(r"[+-]?\d+")
_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


class NonInvertibleDenominatorError(ArithmeticError):
    """Raised when a rational has no residue modulo ``m``."""

    def __init__(self, value: Fraction, modulus: int):
        self.value = value
        self.modulus = modulus
        super().__init__(
            f"denominator of {value} is not invertible modulo {modulus}"
        )


class _ValuationInfinity:
    """Valuation of zero. Only identity comparisons are meaningful."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VALUATION_INFINITY"

    def __reduce__(self):
        return (_ValuationInfinity, ())


VALUATION_INFINITY = _ValuationInfinity()


@dataclass(frozen=True, order=True)
class ResidueClass:
    """Canonical representative ``value`` in ``[0, modulus)``."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            raise ValueError(
                f"residue {self.value} outside [0, {self.modulus})"
            )

    def __int__(self) -> int:
        return self.value


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def padic_valuation(x: RationalLike, p: int):
    """Exponent of ``p`` in ``x``; ``VALUATION_INFINITY`` when ``x == 0``."""
    from .primes import is_prime

    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    x = as_fraction(x)
    if x == 0:
        return VALUATION_INFINITY
    v = 0
    num, den = abs(x.numerator), x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def rational_mod(x: RationalLike, m: int) -> ResidueClass:
    """Residue ``r`` in ``[0, m)`` with ``denominator(x) * r == numerator(x) (mod m)``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    x = as_fraction(x)
    try:
        inv = pow(x.denominator, -1, m)
    except ValueError:
        raise NonInvertibleDenominatorError(x, m) from None
    return ResidueClass(x.numerator * inv % m, m)


def congruent(a: RationalLike, b: RationalLike, m: int) -> bool:
    return rational_mod(a, m) == rational_mod(b, m)


def integer_kth_root(n: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= n``, by integer Newton iteration."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 2 or k == 1:
        return n
    # Start above the root; Newton's iterates then decrease monotonically.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def pow_integer(base: int, exp: int) -> int:
    """``base**exp`` by binary exponentiation."""
    if exp < 0:
        raise ValueError(f"exponent must be non-negative, got {exp}")
    result = 1
    while exp:
        if exp & 1:
            result *= base
        base *= base
        exp >>= 1
    return result


def parse_integer(text: str) -> int:
    text = text.strip()
    if not _INTEGER_RE.fullmatch(text):
        raise ValueError(f"not an integer: {text!r}")
    return int(text)


def parse_rational(text: str) -> Fraction:
    """Parse ``"-1/30"`` or ``"7"`` into a reduced Fraction."""
    text = text.strip()
    match = _RATIONAL_RE.fullmatch(text)
    if not match:
        raise ValueError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: RationalLike) -> str:
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
