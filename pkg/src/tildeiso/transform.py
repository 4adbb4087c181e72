"""Minimal tilde-transformations and the search for f-free ones.

On binary words a minimal transformation applies a minimal op set (see
:func:`tildeiso.distance.minimal_op_sets`) in some order.  The operations
touch disjoint positions, so they commute and the word reached after any
prefix of an ordering depends only on the *set* of operations applied so
far.  An ordering is f-free iff it walks a chain of f-free subsets, which
lets the existence search explore at most ``2**d`` subsets instead of
``d!`` orderings.
"""

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from . import bits
from .budget import current_budget
from .distance import (
    EditOp,
    apply_op,
    iter_opset_masks,
    minimal_op_sets,
    tilde_distance,
)
from .errors import BudgetExceededError, InapplicableOpError, LengthMismatchError
from .words import Word, as_word, find_factor, require_binary

# cap on recorded blocked branches per verdict
MAX_EVIDENCE = 256


@dataclass(frozen=True)
class Transformation:
    """A source word and the operations applied to it, with every intermediate word."""

    source: Word
    ops: tuple
    intermediates: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "source", as_word(self.source))
        object.__setattr__(self, "ops", tuple(self.ops))
        words = [self.source]
        for op in self.ops:
            words.append(apply_op(words[-1], op))
        object.__setattr__(self, "intermediates", tuple(words))

    @property
    def target(self):
        return self.intermediates[-1]

    def __len__(self):
        return len(self.ops)

    def touches_once(self):
        seen = set()
        for op in self.ops:
            touched = set(op.touched())
            if touched & seen:
                return False
            seen |= touched
        return True

    def is_minimal(self):
        return self.touches_once() and len(self) == tilde_distance(self.source, self.target)

    def first_occurrence(self, f):
        """``(step, position)`` of the first intermediate containing ``f`` (0-based), or None."""
        for step, w in enumerate(self.intermediates):
            pos = find_factor(f, w)
            if pos >= 0:
                return step, pos
        return None

    def is_f_free(self, f):
        return self.first_occurrence(f) is None

    def __str__(self):
        parts = [str(self.source)]
        for op, w in zip(self.ops, self.intermediates[1:]):
            parts.append(f"-{op}-> {w}")
        return " ".join(parts)


def enumerate_minimal_transformations(u, v, limit=None):
    """Every ordering of every minimal op set, as :class:`Transformation` objects.

    Raises :class:`BudgetExceededError` when the distance exceeds the
    enumeration budget or the number of orderings exceeds ``limit``.
    """
    u, v = as_word(u), as_word(v)
    require_binary(u, v)
    d = tilde_distance(u, v)
    max_d = current_budget().enumerate
    if d > max_d:
        raise BudgetExceededError(f"full enumeration limited to distance {max_d}, got {d}")
    op_sets = minimal_op_sets(u, v)
    total = factorial(d) * len(op_sets)
    if limit is not None and total > limit:
        raise BudgetExceededError(f"{total} minimal transformations exceed limit {limit}")
    return [Transformation(u, order) for s in op_sets for order in permutations(s.ops)]


def _free_checker(f, m):
    n = len(f)
    if m <= bits.TABLE_BITS:
        table = bits.free_table(f.bits, n, m)
        return lambda w: bool(table[w])
    fs = f.symbols
    return lambda w: fs not in format(w, f"0{m}b")


def _search_subsets(start, masks, is_free, blocked=None):
    """Depth-first search over applied-op subsets; returns an f-free order of indices or None.

    ``blocked`` (a list) receives ``(subset mask, op index, word)`` for
    every extension that creates an occurrence of f.
    """
    d = len(masks)
    full = (1 << d) - 1
    dead = set()

    def dfs(state, word):
        if state == full:
            return []
        for k in range(d):
            bit = 1 << k
            if state & bit or state | bit in dead:
                continue
            nxt = word ^ masks[k]
            if not is_free(nxt):
                if blocked is not None:
                    blocked.append((state, k, nxt))
                continue
            rest = dfs(state | bit, nxt)
            if rest is not None:
                return [k] + rest
        dead.add(state)
        return None

    return dfs(0, start)


def _check_search_budget(d):
    max_d = current_budget().search
    if d > max_d:
        raise BudgetExceededError(f"f-free search limited to distance {max_d}, got {d}")


def has_free_minimal_path(u, v, m, is_free, max_d=None):
    """Packed-word kernel: does an f-free minimal transformation from ``u`` to ``v`` exist?"""
    if not (is_free(u) and is_free(v)):
        return False
    if u == v:
        return True
    if max_d is None:
        max_d = current_budget().search
    for masks in iter_opset_masks(u, v, m):
        if len(masks) > max_d:
            raise BudgetExceededError(f"f-free search limited to distance {max_d}, got {len(masks)}")
        if _search_subsets(u, masks, is_free) is not None:
            return True
    return False


def exists_f_free_minimal_transformation(u, v, f):
    """Some minimal tilde-transformation from ``u`` to ``v`` avoiding ``f``, or None.

    >>> exists_f_free_minimal_transformation("11000", "10110", "1010") is None
    True
    """
    found, _ = _free_search(as_word(u), as_word(v), as_word(f), collect=False)
    return found


def _free_search(u, v, f, collect):
    if len(u) != len(v):
        raise LengthMismatchError(f"words have different lengths: {len(u)} vs {len(v)}")
    require_binary(u, v, f)
    m = len(u)
    is_free = _free_checker(f, m)
    evidence = []
    if not (is_free(u.bits) and is_free(v.bits)):
        return None, evidence
    op_sets = minimal_op_sets(u, v)
    for op_set in op_sets:
        _check_search_budget(len(op_set))
        ops = op_set.ops
        masks = op_set.masks(m)
        blocked = [] if collect else None
        order = _search_subsets(u.bits, masks, is_free, blocked)
        if order is not None:
            return Transformation(u, [ops[k] for k in order]), evidence
        for state, k, word in blocked or ():
            if len(evidence) >= MAX_EVIDENCE:
                break
            applied = [ops[i] for i in range(len(ops)) if state >> i & 1]
            w = Word.from_bits(word, m)
            evidence.append(BlockedBranch(
                op_set=str(op_set),
                applied=tuple(str(op) for op in applied),
                blocking_op=str(ops[k]),
                word=w,
                occurrence=find_factor(f, w),
            ))
    return None, evidence


@dataclass(frozen=True)
class BlockedBranch:
    """One dead end: applying ``blocking_op`` after ``applied`` creates ``f`` at ``occurrence`` (0-based)."""

    op_set: str
    applied: tuple
    blocking_op: str
    word: Word
    occurrence: int

    def to_dict(self):
        return {
            "op_set": self.op_set,
            "applied": list(self.applied),
            "blocking_op": self.blocking_op,
            "word": str(self.word),
            "occurrence": self.occurrence + 1,
        }


@dataclass(frozen=True)
class WitnessVerdict:
    u: Word
    v: Word
    f: Word
    u_free: bool
    v_free: bool
    distance: int
    no_free_transformation: bool
    blocking_evidence: tuple
    free_transformation: Transformation = None

    @property
    def pair(self):
        return (self.u, self.v)

    @property
    def passed(self):
        return self.u_free and self.v_free and self.distance >= 2 and self.no_free_transformation

    def failed_clauses(self):
        failed = []
        if not (self.u_free and self.v_free):
            failed.append(1)
        if self.distance < 2:
            failed.append(2)
        if not self.no_free_transformation:
            failed.append(3)
        return failed

    def to_dict(self):
        return {
            "f": str(self.f),
            "u": str(self.u),
            "v": str(self.v),
            "u_free": self.u_free,
            "v_free": self.v_free,
            "distance": self.distance,
            "no_free_transformation": self.no_free_transformation,
            "passed": self.passed,
            "failed_clauses": self.failed_clauses(),
            "free_transformation": None if self.free_transformation is None else str(self.free_transformation),
            "blocking_evidence": [b.to_dict() for b in self.blocking_evidence],
        }


def is_witness_pair(f, u, v):
    """Check the three witness clauses for ``(u, v)`` against ``f``.

    1. both words avoid ``f``; 2. their tilde distance is at least 2;
    3. no minimal tilde-transformation between them avoids ``f``.

    >>> is_witness_pair("1010", "11000", "10110").passed
    True
    """
    f, u, v = as_word(f), as_word(u), as_word(v)
    if len(u) != len(v):
        raise LengthMismatchError(f"words have different lengths: {len(u)} ({u}) vs {len(v)} ({v})")
    require_binary(f, u, v)
    u_free = find_factor(f, u) < 0
    v_free = find_factor(f, v) < 0
    d = tilde_distance(u, v)
    found, evidence = _free_search(u, v, f, collect=True)
    return WitnessVerdict(
        u=u, v=v, f=f,
        u_free=u_free, v_free=v_free,
        distance=d,
        no_free_transformation=found is None,
        blocking_evidence=tuple(evidence),
        free_transformation=found,
    )


def parse_ops(labels):
    """``["S2", "R4"]`` or ``"S2 R4"`` -> list of :class:`EditOp`."""
    if isinstance(labels, str):
        labels = labels.split()
    try:
        return [EditOp.parse(label) for label in labels]
    except IndexError:
        raise InapplicableOpError(f"cannot parse operations {labels!r}") from None
