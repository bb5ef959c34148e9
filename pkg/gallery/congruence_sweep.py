"""
Sweeping every congruence over a prime range
============================================

A sweep produces one verdict per (theorem, p, r) cell. Primes that do not
satisfy a theorem's hypotheses are skipped. Reports serialise to CSV or JSON
with a fixed column order, so two runs can be diffed byte for byte.
"""

# %%
from collections import Counter

from primecong import PrimeRange, TheoremId, sweep

report = sweep(list(TheoremId), PrimeRange(3, 60), "all", timestamp="example")
print(report.summary())
print(Counter(v.theorem.value for v in report.verdicts))

# %%
# The first rows of the CSV form.
print("\n".join(report.to_csv().splitlines()[:6]))

# %%
# Wolstenholme's congruence needs p >= 5; checked directly at p = 3 it fails
# and the verdict says why.
from primecong.congruences import verify_wolstenholme

print(verify_wolstenholme(3).describe())

# %%
# Theorem 1 is stated modulo p. The sweep can also record residues modulo
# p**2 for exploration; nothing is asserted about them.
from primecong.congruences import verify_theorem1

for r in range(1, 7):
    v = verify_theorem1(7, r, explore_p2=True)
    print(r, v.passed, v.note)
