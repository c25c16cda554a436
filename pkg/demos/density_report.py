"""
How often is p = a^2 + c^4, and in which congruence class?
==========================================================

Counts lattice points (a, c) with a^2 + c^4 prime and at most X,
split by (a mod 16, c mod 4), and compares each cell against its
predicted main term c(a0, c0) (16 kappa / pi) X^(3/4) / log X.

Run:  python3 demos/density_report.py
"""

import math

from sixteenrank import (
    CongruencePair,
    TRIVIAL_PAIR,
    canonical_pairs,
    count_primes,
    count_report,
    density_constant,
    expected_main_term,
    kappa,
)
from sixteenrank.cli import render_density

# the lemniscate constant drives every main term
k = kappa()
print(f"kappa = integral of sqrt(1 - t^4) on [0, 1] = {k:.12f}")
print()

X = 10**7

# all 16 canonical classes carry the same density 1/32
report = count_report(X)
print(render_density(report, "text"), end="")
print()

ratios = [row.ratio for row in report.rows]
print(f"ratio spread across the 16 classes: "
      f"{min(ratios):.3f} to {max(ratios):.3f}")
print()

# the trivial pair counts the whole signed lattice; its constant is 1
total = count_primes(X, TRIVIAL_PAIR)
main = expected_main_term(X, TRIVIAL_PAIR)
print(f"total lattice count: {total}, main term {main:.0f}, "
      f"ratio {total / main:.3f}")

# parity splits the total: odd a with even c, even a with odd c, and
# the 4 points (+-1, +-1) of p = 2
odd_a = count_primes(X, CongruencePair(1, 2, 0, 2))
even_a = count_primes(X, CongruencePair(0, 2, 1, 2))
print(f"odd a, even c: {odd_a}; even a, odd c: {even_a}; "
      f"p = 2 points: {total - odd_a - even_a}")
print()

# density constants are exact rationals
for pair in canonical_pairs()[:2]:
    print(f"density constant for {pair}: {density_constant(pair)}")
print(f"density constant for the trivial pair: {density_constant(TRIVIAL_PAIR)}")

# mean gap heuristic: primes of this shape up to X number about
# (16 kappa / pi) X^(3/4) / log X in lattice count, so the count is
# a vanishing fraction of all primes below X
pi_x_rough = X / math.log(X)
print(f"for scale, X / log X = {pi_x_rough:.0f}")
