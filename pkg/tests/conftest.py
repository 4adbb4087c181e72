"""Independent brute-force oracles shared by the test modules.

None of these use the library's matching, subset search or packed kernels;
they work on plain strings straight from the definitions.
"""

from functools import lru_cache
from itertools import combinations, product

import numpy as np
import pytest
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path


def binary_strings(n):
    return ["".join(p) for p in product("01", repeat=n)]


def naive_contains(f, w):
    return any(w[i:i + len(f)] == f for i in range(len(w) - len(f) + 1))


def flip(c):
    return "1" if c == "0" else "0"


def string_ops(w):
    """Every applicable binary op on ``w`` as ``(kind, pos, touched, result)``."""
    out = []
    for i in range(len(w)):
        out.append(("R", i, (i,), w[:i] + flip(w[i]) + w[i + 1:]))
    for i in range(len(w) - 1):
        if w[i] != w[i + 1]:
            out.append(("S", i, (i, i + 1), w[:i] + w[i + 1] + w[i] + w[i + 2:]))
    return out


@lru_cache(maxsize=None)
def all_pairs_distance(m):
    """Full tilde-distance matrix on {0,1}^m by BFS on the explicitly built op-graph."""
    words = binary_strings(m)
    index = {w: k for k, w in enumerate(words)}
    rows, cols = [], []
    for w in words:
        for *_, t in string_ops(w):
            rows.append(index[w])
            cols.append(index[t])
    size = len(words)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size)).tocsr()
    dist = shortest_path(graph, unweighted=True, directed=False)
    return index, dist.astype(np.int16)


def oracle_dist(u, v):
    index, dist = all_pairs_distance(len(u))
    return int(dist[index[u], index[v]])


def brute_minimal_op_sets(u, v):
    """All position-disjoint op sets of size dist(u, v) turning u into v, as sets of (kind, 0-based pos)."""
    d = oracle_dist(u, v)
    ops = string_ops(u)
    found = set()
    for combo in combinations(ops, d):
        touched = [p for op in combo for p in op[2]]
        if len(touched) != len(set(touched)):
            continue
        w = list(u)
        for kind, i, _, _ in combo:
            if kind == "R":
                w[i] = flip(w[i])
            else:
                w[i], w[i + 1] = w[i + 1], w[i]
        if "".join(w) == v:
            found.add(frozenset((kind, i) for kind, i, _, _ in combo))
    return found


def brute_free_minimal_exists(u, v, f):
    """Walk every op sequence of length dist(u, v) that touches each position at most once."""
    if naive_contains(f, u) or naive_contains(f, v):
        return False
    d = oracle_dist(u, v)

    def walk(w, used, steps):
        if steps == d:
            return w == v
        for kind, i, touched, t in string_ops(w):
            if used & set(touched) or naive_contains(f, t):
                continue
            if walk(t, used | set(touched), steps + 1):
                return True
        return False

    return walk(u, frozenset(), 0)


def brute_is_witness(f, u, v):
    return (not naive_contains(f, u) and not naive_contains(f, v)
            and oracle_dist(u, v) >= 2 and not brute_free_minimal_exists(u, v, f))


@pytest.fixture
def budget_env(monkeypatch):
    """Set ``TILDE_ISO_BUDGET`` for one test."""
    def set_budget(text):
        monkeypatch.setenv("TILDE_ISO_BUDGET", text)
    return set_budget
