"""
Classifying words
=================

Hamming isometry is decided from the overlaps alone.  For the tilde
distance a verified construction settles non-isometry, otherwise an
exhaustive search over short f-free pairs gives a bounded answer.
"""

import time

from tildeiso import classify

for f, max_len in [("1010", 8), ("111000", 10), ("11", 8)]:
    start = time.perf_counter()
    report = classify(f, max_len)
    print(f"{f:>8}  ham={report.ham_status:<14} tilde={report.tilde_label:<20}"
          f" witness={report.witness_pair}  ({time.perf_counter() - start:.1f}s)")
