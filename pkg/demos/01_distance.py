"""
Swap-and-mismatch distance
==========================

Replacements change one symbol, swaps exchange two different neighbours.
On binary words the distance has a closed form; here it is compared with a
plain breadth-first search.
"""

from tildeiso import minimal_op_sets, tilde_distance, tilde_distance_oracle, Word
from tildeiso.transform import enumerate_minimal_transformations

# one swap and one replacement turn 1011 into 0110
print(tilde_distance("1011", "0110"))
print(tilde_distance_oracle("1011", "0110"))

# Hamming distance would say 2 here as well, but the two mismatches
# are not next to each other so no swap helps
print(tilde_distance("100", "001"))

# the search works over any alphabet
print(tilde_distance_oracle(Word("012", "012"), Word("120", "012")))

# 010 -> 101 has two minimal operation sets
for ops in minimal_op_sets("010", "101"):
    print(ops)

# and each set can be applied in any order
for t in enumerate_minimal_transformations("010", "101"):
    print(t)
