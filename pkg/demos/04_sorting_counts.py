"""Counting operations in simple sorts.

The restart bubble sort goes back to the front after every swap. On [4,3,2,1]
it makes 6 swaps and 13 comparisons, one more than the n^2 - n = 12 you get by
assuming every swap costs exactly one extra failed comparison. The textbook
version, with shrinking passes, does hit 12 (comparisons plus swaps).

Run:  python demos/04_sorting_counts.py
"""

import numpy as np

from cliquelab import bubble_restart, bubble_textbook, merge_sort, radix_sort_binary, worst_case_scan
from cliquelab.bounds import sort_lower_bound

data = [4, 3, 2, 1]
for name, sort in (("restart", bubble_restart), ("textbook", bubble_textbook), ("merge", merge_sort)):
    out, t = sort(data)
    print(f"{name:>9}: {out}  comparisons={t.comparisons:>2} swaps={t.swaps} moves={t.moves}")

_, t = bubble_restart(data)
print(f"\nrestart, swaps + non-swap comparisons: {t.paper_ops}  (n^2 - n = 12)")

print("\nWorst case over all permutations vs the decision-tree bound:")
print(f"{'n':>3} {'bound':>6} {'restart':>8} {'bubble':>7} {'merge':>6}")
for n in range(2, 8):
    row = [worst_case_scan(alg, n)[0] for alg in ("bubble-restart", "bubble", "merge")]
    print(f"{n:>3} {sort_lower_bound(n):>6} {row[0]:>8} {row[1]:>7} {row[2]:>6}")

perm = np.random.Generator(np.random.PCG64(1)).permutation(256).tolist()
out, t = radix_sort_binary(perm, 8)
print(f"\nBinary radix sort, 256 values, 8 bits: {t.moves} moves, sorted={out == sorted(perm)}")
