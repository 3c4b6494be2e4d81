"""Networks as bit strings.

A network of order n is an n x n symmetric 0/1 matrix with ones on the
diagonal. Reading it row by row gives one n*n bit string, and asking whether
a candidate clique Q sits inside a network N becomes a single AND followed by
an equality test: (N & Q) == Q.

Run:  python demos/01_bit_strings.py
"""

from cliquelab import (
    ComparisonTally,
    WordCounter,
    clique_matrix,
    flatten,
    paper_example,
    subnetwork_compare,
    unflatten,
)

M = paper_example()
print("The six-node example network:")
for row in M.rows():
    print("   ", row)

bits = flatten(M)
print(f"\nFlattened ({len(bits)} bits): {bits}")
print("Unflattening gives the same matrix back:", unflatten(bits) == M)

# Entry (i, j) lives at string position (i - 1) * n + j.
i, j = 2, 5
print(f"Entry ({i}, {j}) = {M.entry(i, j)}, string position {(i - 1) * 6 + j} = {bits.bit((i - 1) * 6 + j)}")

print("\nIs {2,3,4} a clique? Build its matrix and compare.")
Q = clique_matrix(6, [2, 3, 4])
for row in Q.rows():
    print("   ", row)

for width in (64, 8):
    tally = ComparisonTally(words=WordCounter(width, strict=True))
    hit = subnetwork_compare(Q, M, tally)
    print(f"  W={width:>2}: contained={hit}, word operations={tally.word_ops}")

# Entry (5, 6) is zero, so {1, 5, 6} cannot be a clique.
miss = subnetwork_compare(clique_matrix(6, [1, 5, 6]), M, ComparisonTally())
print("Is {1,5,6} a clique?", miss)
