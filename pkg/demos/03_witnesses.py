"""
Witness pairs
=============

A witness pair for f is two f-free words at distance at least 2 that no
minimal transformation connects without passing through f.  Builders
produce candidates from overlaps; the verifier has the final word.
"""

from tildeiso import alpha_beta, construct_witnesses, error_overlaps, is_witness_pair

f = "10010110"
eo = error_overlaps(f)[3]
alpha, beta = alpha_beta(f, eo)
print(alpha, beta)

verdict = is_witness_pair(f, alpha, beta)
print("passed:", verdict.passed, "distance:", verdict.distance)

# every dead end records where f appeared
for b in verdict.blocking_evidence[:4]:
    print(" ", " ".join(b.applied + (b.blocking_op,)), "->", b.word, "at", b.occurrence + 1)

# the search over all builders and symmetric images
for word in ["1010", "0011", "10011", "1100", "111000"]:
    c = construct_witnesses(word)
    print(word, None if c is None else (c.kind, c.transform, [str(w) for w in c.pair]))
