"""
Distances inside the f-free op-graph
====================================

Join two words of length m when one replacement or one swap separates
them, then drop every word containing f.  Shortest paths in what remains
can be longer than the tilde distance; the audit lists those pairs.
"""

import numpy as np

from tildeiso import audit_subgraph_distances
from tildeiso.isometry import free_op_graph

for f, m in [("11", 6), ("111000", 8), ("1010", 5)]:
    words, graph = free_op_graph(f, m)
    bad = audit_subgraph_distances(f, m)
    degrees = np.asarray(graph.sum(axis=1)).ravel()
    print(f"f={f} m={m}: {len(words)} vertices, mean degree {degrees.mean():.2f}, "
          f"{len(bad)} stretched pairs")
    for c in bad[:4]:
        print("   ", c.u, c.v, c.tilde_distance, "->", c.subgraph_distance)
