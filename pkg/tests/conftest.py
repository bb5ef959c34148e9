import math
from fractions import Fraction

import pytest


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def akiyama_tanigawa(n_max: int) -> list[Fraction]:
    """B_0..B_{n_max} by the Akiyama-Tanigawa triangle, with B_1 = -1/2."""
    out = []
    a = []
    for m in range(n_max + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    # The triangle yields B_1 = +1/2.
    if n_max >= 1:
        out[1] = -out[1]
    return out


def brute_bernoulli_poly(coeffs: dict[int, Fraction], x: Fraction) -> Fraction:
    """Evaluate a polynomial given as {power: coefficient}."""
    return sum((c * Fraction(x) ** k for k, c in coeffs.items()), Fraction(0))


# B_n(x) coefficients from standard tables, independent of the library.
B_POLY_TABLE = {
    2: {2: Fraction(1), 1: Fraction(-1), 0: Fraction(1, 6)},
    4: {4: Fraction(1), 3: Fraction(-2), 2: Fraction(1), 0: Fraction(-1, 30)},
    6: {6: Fraction(1), 5: Fraction(-3), 4: Fraction(5, 2), 2: Fraction(-1, 2), 0: Fraction(1, 42)},
}


@pytest.fixture(scope="session")
def at_bernoulli():
    return akiyama_tanigawa(60)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
