"""Counting arguments, checked in exact arithmetic.

h(n) = C(n, n/2) is the size of the largest layer of subsets. Since the n+1
binomial coefficients sum to 2^n and h(n) is the biggest, h(n) exceeds the
average 2^n / (n + 1). The census counts networks that hold the clique on the
last n/2 nodes: 2^((3n^2 - 2n)/8) of them.

Run:  python demos/03_bounds.py
"""

from cliquelab.bounds import (
    census_brute_force,
    census_formula,
    gamma_duplication_residual,
    h,
    phi,
    sort_bound_estimate,
    sort_lower_bound,
)

print(f"{'n':>4} {'h(n)':>22} {'2^n/(n+1)':>24}  h > phi")
for n in (2, 4, 8, 16, 32, 64):
    print(f"{n:>4} {h(n):>22} {float(phi(n)):>24.1f}  {h(n) > phi(n)}")

print("\nCensus of networks containing the last-half clique:")
for n in (2, 4, 6):
    print(f"  n={n}: formula {census_formula(n)}, brute force {census_brute_force(n)}")

print("\nComparison sorting needs at least ceil(log2 n!) comparisons:")
for n in (2, 4, 8, 16, 64, 256):
    print(f"  n={n:>3}: bound {sort_lower_bound(n):>5}, n log2(n)/2 - 1 = {sort_bound_estimate(n):8.1f}")

worst = max(gamma_duplication_residual(k / 2) for k in range(1, 65))
print(f"\nGamma duplication formula, worst relative residual on z = 0.5..32: {worst:.1e}")
