"""
Four routes to S_q(p)
=====================

``S_q(p)`` sums ``floor(k**(2q+1) / p)`` over ``k = 1 .. p-1``. We compare the
brute sum with the double binomial sum over Bernoulli numbers, the
Bernoulli-polynomial expression, and the factored polynomials for q = 1, 2, 3.
"""

# %%
from primecong.primes import PrimeRange
from primecong.primesums import s1_s2_s3_closed, s_q_closed_binomial, s_q_closed_polynomial, s_q_sum

print(f"{'p':>3} {'q':>2} {'brute':>14} {'binomial':>14} {'polynomial':>14} {'factored':>14}")
for p in PrimeRange(3, 23):
    for q in (1, 2, 3):
        row = (s_q_sum(p, q), s_q_closed_binomial(p, q), s_q_closed_polynomial(p, q), s1_s2_s3_closed(p, q))
        print(f"{p:>3} {q:>2} " + " ".join(f"{str(v):>14}" for v in row))
        assert len(set(row)) == 1

# %%
# The closed forms are plain polynomials in p, so they also agree with each
# other at composite arguments, where there is no floor sum to compare to.
for p in (4, 9, 10):
    print(p, s_q_closed_binomial(p, 2), s_q_closed_polynomial(p, 2), s1_s2_s3_closed(p, 2))

# %%
# The introduction's two identities: the grid sum and the cube-root sum.
from primecong.primesums import cube_root_sum, cube_root_sum_closed, grid_sum, grid_sum_closed

for p in (3, 5, 7, 11, 13):
    print(p, grid_sum(p), grid_sum_closed(p), cube_root_sum(p), cube_root_sum_closed(p))
