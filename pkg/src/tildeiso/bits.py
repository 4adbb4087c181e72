"""Packed-integer kernels for binary words of a fixed length ``m``.

A word ``w`` of length ``m`` is the integer whose binary expansion, padded to
``m`` digits, spells ``w``.  String index ``p`` is bit ``m - 1 - p``.  With
this layout every edit operation on a binary word is an XOR with a constant
mask: a replacement flips one bit and a swap of two distinct adjacent bits
flips both.
"""

from functools import lru_cache

import numpy as np

# tables are only built for lengths up to this many bits
TABLE_BITS = 20


def bit_of(pos, m):
    return 1 << (m - 1 - pos)


def replace_mask(pos, m):
    return 1 << (m - 1 - pos)


def swap_mask(pos, m):
    return 3 << (m - 2 - pos)


def swap_edges(u, x):
    """Bit ``k`` is set iff bits ``k`` and ``k+1`` both mismatch and differ in ``u``."""
    return x & (x >> 1) & (u ^ (u >> 1))


def matching_size(edges):
    """Maximum number of disjoint consecutive edge pairs; ceil(L/2) per run of L set bits."""
    count = 0
    while edges:
        low = edges & -edges
        count += 1
        edges &= ~(low | (low << 1))
    return count


def tilde_bits(u, v):
    x = u ^ v
    return x.bit_count() - matching_size(swap_edges(u, x))


def reverse_bits(w, m):
    return int(format(w, f"0{m}b")[::-1], 2) if m else 0


def complement_bits(w, m):
    return w ^ ((1 << m) - 1)


@lru_cache(maxsize=None)
def popcount_table(m):
    table = np.zeros(1 << m, dtype=np.int8)
    for k in range(m):
        table[1 << k:1 << (k + 1)] = table[: 1 << k] + 1
    return table


@lru_cache(maxsize=None)
def matching_table(m):
    """``matching_table(m)[e] == matching_size(e)`` for all ``e < 2**m``."""
    size = 1 << m
    table = np.zeros(size, dtype=np.int8)
    for e in range(1, size):
        table[e] = 1 + table[e >> 2] if e & 1 else table[e >> 1]
    return table


@lru_cache(maxsize=None)
def reverse_table(m):
    words = np.arange(1 << m, dtype=np.int64)
    out = np.zeros_like(words)
    for k in range(m):
        out |= ((words >> k) & 1) << (m - 1 - k)
    return out


def tilde_row(u, vs, m):
    """Vectorized tilde distance from ``u`` to every entry of the int array ``vs``."""
    x = np.bitwise_xor(vs, u)
    uu = u ^ (u >> 1)
    edges = x & (x >> 1) & uu
    return popcount_table(m)[x].astype(np.int16) - matching_table(m)[edges]


@lru_cache(maxsize=64)
def free_table(f_bits, n, m):
    """Boolean array over all ``2**m`` words: True where the word avoids ``f``.

    ``f`` is given packed (``f_bits``, ``n``) so the cache key stays hashable.
    """
    if m > TABLE_BITS:
        raise ValueError(f"free_table limited to {TABLE_BITS} bits, got {m}")
    words = np.arange(1 << m, dtype=np.int64)
    free = np.ones(1 << m, dtype=bool)
    if n == 0:
        free[:] = False
        return free
    mask = (1 << n) - 1
    for shift in range(m - n + 1):
        free &= ((words >> shift) & mask) != f_bits
    free.setflags(write=False)
    return free
