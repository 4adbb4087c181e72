"""Swap-and-mismatch ("tilde") distance, edit operations and minimal op sets."""

import enum
from collections import deque
from dataclasses import dataclass
from itertools import product

from . import bits
from .budget import current_budget
from .errors import (
    BoundsError,
    BudgetExceededError,
    InapplicableOpError,
    LengthMismatchError,
    UnsupportedAlphabetError,
)
from .words import Word, as_word, require_binary


class OpKind(enum.Enum):
    REPLACE = "R"
    SWAP = "S"


# swaps sort before replacements that start at the same position
_KIND_RANK = {OpKind.SWAP: 0, OpKind.REPLACE: 1}


@dataclass(frozen=True)
class EditOp:
    """A replacement at ``position`` or a swap of ``position`` and ``position + 1``.

    ``position`` is 0-based; ``str(op)`` renders the conventional 1-based
    label such as ``S2`` or ``R4``.  ``symbol`` is the replacement symbol and
    may be left out on binary words, where it is forced.
    """

    kind: OpKind
    position: int
    symbol: str = None

    @classmethod
    def swap(cls, position):
        return cls(OpKind.SWAP, position)

    @classmethod
    def replace(cls, position, symbol=None):
        return cls(OpKind.REPLACE, position, symbol)

    @classmethod
    def parse(cls, label):
        """Inverse of ``str``: ``"S2"`` -> swap at 0-based position 1."""
        kind = label[:1].upper()
        pos, _, symbol = label[1:].partition("=")
        try:
            position = int(pos) - 1
        except ValueError:
            raise InapplicableOpError(f"cannot parse edit operation {label!r}") from None
        if kind not in ("R", "S") or position < 0:
            raise InapplicableOpError(f"cannot parse edit operation {label!r}")
        return cls(OpKind(kind), position, symbol or None)

    @property
    def is_swap(self):
        return self.kind is OpKind.SWAP

    def touched(self):
        if self.is_swap:
            return (self.position, self.position + 1)
        return (self.position,)

    def sort_key(self):
        return (self.position, _KIND_RANK[self.kind])

    def mask(self, m):
        if self.is_swap:
            return bits.swap_mask(self.position, m)
        return bits.replace_mask(self.position, m)

    def __str__(self):
        label = f"{self.kind.value}{self.position + 1}"
        if self.symbol is not None and self.symbol not in "01":
            label += f"={self.symbol}"
        return label


def apply_op(w, op):
    """Apply one edit operation, enforcing the applicability rules.

    >>> str(apply_op("1011", EditOp.swap(0)))
    '0111'
    """
    w = as_word(w)
    s = w.symbols
    p = op.position
    if op.is_swap:
        if not 0 <= p < len(s) - 1:
            raise BoundsError(f"swap {op} outside 1..{len(s) - 1}")
        if s[p] == s[p + 1]:
            raise InapplicableOpError(f"swap {op} on equal symbols {s[p]}{s[p + 1]} of {s}")
        return Word(s[:p] + s[p + 1] + s[p] + s[p + 2:], w.alphabet)
    if not 0 <= p < len(s):
        raise BoundsError(f"replacement {op} outside 1..{len(s)}")
    symbol = op.symbol
    if symbol is None:
        if not w.is_binary:
            raise InapplicableOpError(f"replacement {op} needs a symbol on alphabet {w.alphabet!r}")
        symbol = "1" if s[p] == "0" else "0"
    if symbol == s[p]:
        raise InapplicableOpError(f"replacement {op} writes the symbol already at position {p + 1}")
    if symbol not in w.alphabet:
        raise UnsupportedAlphabetError(f"symbol {symbol!r} not in alphabet {w.alphabet!r}")
    return Word(s[:p] + symbol + s[p + 1:], w.alphabet)


def apply_ops(w, ops):
    for op in ops:
        w = apply_op(w, op)
    return as_word(w)


@dataclass(frozen=True)
class OpSet:
    """Edit operations touching pairwise disjoint positions, kept in position order."""

    ops: tuple

    def __post_init__(self):
        ordered = tuple(sorted(self.ops, key=EditOp.sort_key))
        object.__setattr__(self, "ops", ordered)
        seen = set()
        for op in ordered:
            touched = set(op.touched())
            if touched & seen:
                raise InapplicableOpError(f"operations {self} touch a position twice")
            seen |= touched

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def touched(self):
        return tuple(sorted(p for op in self.ops for p in op.touched()))

    def sort_key(self):
        return tuple(op.sort_key() for op in self.ops)

    def apply(self, w):
        return apply_ops(w, self.ops)

    def masks(self, m):
        return tuple(op.mask(m) for op in self.ops)

    def __str__(self):
        return " ".join(str(op) for op in self.ops)


def _check_lengths(u, v):
    if len(u) != len(v):
        raise LengthMismatchError(f"words have different lengths: {len(u)} ({u}) vs {len(v)} ({v})")


def hamming_distance(u, v):
    u, v = as_word(u), as_word(v)
    _check_lengths(u, v)
    return sum(a != b for a, b in zip(u.symbols, v.symbols))


def tilde_distance(u, v):
    """Exact tilde distance between two binary words of equal length.

    Mismatch count minus a maximum set of disjoint adjacent mismatch pairs
    ``(i, i+1)`` with ``u[i] != u[i+1]``; each such pair is a single swap.
    Only valid on binary words, where an optimal transformation never needs
    to touch a position twice.  Use :func:`tilde_distance_oracle` otherwise.

    >>> tilde_distance("1011", "0110")
    2
    """
    u, v = as_word(u), as_word(v)
    _check_lengths(u, v)
    if not (u.is_binary and v.is_binary):
        raise UnsupportedAlphabetError("tilde_distance is binary only; use tilde_distance_oracle")
    return bits.tilde_bits(u.bits, v.bits)


def _neighbours(s, alphabet):
    for i, a in enumerate(s):
        head, tail = s[:i], s[i + 1:]
        for x in alphabet:
            if x != a:
                yield head + x + tail
    for i in range(len(s) - 1):
        if s[i] != s[i + 1]:
            yield s[:i] + s[i + 1] + s[i] + s[i + 2:]


def _oracle_alphabet(u, v):
    alphabet = u.alphabet
    for ch in v.alphabet:
        if ch not in alphabet:
            alphabet += ch
    return alphabet


def _check_oracle_budget(m):
    limit = current_budget().oracle
    if m > limit:
        raise BudgetExceededError(f"BFS oracle limited to length {limit}, got {m}")


def tilde_distance_oracle(u, v):
    """Tilde distance by breadth-first search over the op-graph on Σ^m.

    Any alphabet; a position may change any number of times.  This is the
    ground-truth metric the binary fast path is checked against.

    >>> tilde_distance_oracle(Word("012", "012"), Word("120", "012"))
    2
    """
    u, v = as_word(u), as_word(v)
    _check_lengths(u, v)
    _check_oracle_budget(len(u))
    alphabet = _oracle_alphabet(u, v)
    source, target = u.symbols, v.symbols
    if source == target:
        return 0
    dist = {source: 0}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        d = dist[s] + 1
        for t in _neighbours(s, alphabet):
            if t not in dist:
                if t == target:
                    return d
                dist[t] = d
                queue.append(t)
    raise AssertionError("op-graph on equal-length words is connected")


def oracle_distances_from(u, alphabet=None):
    """Single-source BFS: ``{word string: tilde distance}`` for all of Σ^|u|."""
    u = as_word(u)
    _check_oracle_budget(len(u))
    alphabet = alphabet or u.alphabet
    dist = {u.symbols: 0}
    queue = deque([u.symbols])
    while queue:
        s = queue.popleft()
        d = dist[s] + 1
        for t in _neighbours(s, alphabet):
            if t not in dist:
                dist[t] = d
                queue.append(t)
    return dist


def _path_matchings(vertices):
    """All maximum matchings of a path, pairing the leftmost vertex first."""
    k = len(vertices)
    if k < 2:
        return [[]]
    out = [[vertices[0]] + rest for rest in _path_matchings(vertices[2:])]
    if k % 2:
        out += _path_matchings(vertices[1:])
    return out


def swap_layouts(u, v):
    """All ``(swap_starts, replace_positions)`` of minimal position-once op sets.

    ``u`` and ``v`` are binary strings of equal length.
    """
    mism = [i for i in range(len(u)) if u[i] != v[i]]
    # split mismatches into paths of swappable neighbours
    components, current = [], []
    for p in mism:
        if current and p == current[-1] + 1 and u[p] != u[p - 1]:
            current.append(p)
        else:
            if current:
                components.append(current)
            current = [p]
    if current:
        components.append(current)
    per_component = [_path_matchings(c) for c in components]
    layouts = []
    for choice in product(*per_component):
        swaps = sorted(p for starts in choice for p in starts)
        covered = set(swaps) | {p + 1 for p in swaps}
        layouts.append((tuple(swaps), tuple(p for p in mism if p not in covered)))
    return layouts


def minimal_op_sets(u, v):
    """Every minimal position-once op set turning binary ``u`` into ``v``.

    Sorted by the positions of the operations, a swap before a replacement
    starting at the same position.

    >>> [str(s) for s in minimal_op_sets("010", "101")]
    ['S1 R3', 'R1 S2']
    """
    u, v = as_word(u), as_word(v)
    _check_lengths(u, v)
    require_binary(u, v)
    sets = []
    for swaps, replaces in swap_layouts(u.symbols, v.symbols):
        ops = [EditOp.swap(p) for p in swaps] + [EditOp.replace(p) for p in replaces]
        sets.append(OpSet(tuple(ops)))
    sets.sort(key=OpSet.sort_key)
    return sets


def iter_opset_masks(u, v, m):
    """Minimal op sets of packed words as lists of XOR masks, generated lazily in no fixed order."""
    x = u ^ v
    components, current, prev = [], [], None
    for p in range(m):
        b = m - 1 - p
        if not x >> b & 1:
            continue
        if current and prev == p - 1 and (u >> b & 1) != (u >> (b + 1) & 1):
            current.append(p)
        else:
            if current:
                components.append(current)
            current = [p]
        prev = p
    if current:
        components.append(current)
    fixed = []
    branching = []
    for comp in components:
        if len(comp) == 1:
            fixed.append(bits.replace_mask(comp[0], m))
            continue
        options = []
        for starts in _path_matchings(comp):
            covered = set(starts) | {q + 1 for q in starts}
            masks = [bits.swap_mask(q, m) for q in starts]
            masks += [bits.replace_mask(q, m) for q in comp if q not in covered]
            options.append(masks)
        if len(options) == 1:
            fixed.extend(options[0])
        else:
            branching.append(options)
    for choice in product(*branching):
        masks = list(fixed)
        for part in choice:
            masks.extend(part)
        yield masks
