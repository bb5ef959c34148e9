"""
Floor sums at p = 3, 5, 7
=========================

The sum ``T(p) = floor(1**p/p) + ... + floor((p-1)**p/p)`` is computed three
ways: by brute force, from Bernoulli polynomials of degree ``p + 1``, and as
a residue modulo ``p`` compared against ``(p + 1) / 2``.
"""

# %%
# Brute force uses exact big-integer powers only.
from primecong.primesums import t_closed, t_sum

for p in (3, 5, 7):
    print(f"T({p}) = {t_sum(p)}")

# %%
# The same values from the Bernoulli-polynomial closed form.
for p in (3, 5, 7):
    print(f"closed T({p}) = {t_closed(p)}")

# %%
# Reduced modulo p, each value matches (p + 1) / 2.
from primecong.congruences import verify_eq_un

for p in (3, 5, 7):
    print(verify_eq_un(p).describe())
