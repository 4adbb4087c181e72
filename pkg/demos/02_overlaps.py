"""
Error overlaps
==============

For every shift r the prefix and suffix of length n - r are compared with
the tilde distance.  Overlaps with one or two errors drive everything else.
"""

from tildeiso import condition_tilde, error_overlaps

f = "10010110"
for eo in error_overlaps(f):
    line = f"r={eo.shift} q={eo.distance} {'|'.join(eo.type_tags)}"
    if eo.distance == 2:
        line += f" positions={[p + 1 for p in eo.realizations[0].positions]} condition={condition_tilde(f, eo)}"
    print(line)

# a word whose 2-error overlap meets the periodicity condition
f = "01011010"
eo = error_overlaps(f)[3]
print(eo.digest(), condition_tilde(f, eo))
