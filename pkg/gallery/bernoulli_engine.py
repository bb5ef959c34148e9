"""
Bernoulli numbers and polynomials
=================================

Values are exact fractions with ``B_1 = -1/2``. The polynomial identities used
by the closed forms are checked here at a few arguments.
"""

# %%
from fractions import Fraction

from primecong.bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    faulhaber_sum,
    reflection_check,
    von_staudt_clausen_check,
)
from primecong.exact import format_rational, padic_valuation

for n in range(0, 21, 2):
    print(f"B_{n} = {format_rational(bernoulli_number(n))}")

# %%
# Denominators follow von Staudt-Clausen.
print(all(von_staudt_clausen_check(n) for n in range(2, 101, 2)))

# %%
# B_n(-x) = B_n(x + 1) for even n, e.g. n = 6 at x = 5.
print(reflection_check(6, 5), bernoulli_polynomial(6, -5), bernoulli_polynomial(6, 6))

# %%
# Power sums from Bernoulli polynomials.
print(faulhaber_sum(5, 10), sum(k**5 for k in range(1, 10)))

# %%
# p * B_{p-1} is p-integral, which is why Glaisher's formula has a residue mod p**2.
for p in (5, 7, 11, 13):
    print(p, padic_valuation(bernoulli_number(p - 1), p), padic_valuation(p * bernoulli_number(p - 1), p))
