"""Error overlaps of a binary word under the tilde and Hamming distances.

For a shift ``r`` the overlap window has length ``l = n - r`` and compares
``prefix(f, l)`` with ``suffix(f, l)``.  A q-tilde-error overlap is a shift
where those two words are at tilde distance ``q``.  For ``q <= 2`` every
minimal op set transforming the prefix into the suffix is kept as a
:class:`Realization`; a block such as ``101`` against ``010`` is realized
both as swap-then-replace (SR) and as replace-then-swap (RS).
"""

from dataclasses import dataclass

from .distance import hamming_distance, minimal_op_sets, tilde_distance
from .errors import PreconditionError
from .words import as_word, require_binary

TYPE_TAGS = ("NONE", "R", "S", "RR", "SR", "RS", "SS", "HIGHER")


@dataclass(frozen=True)
class Realization:
    """One minimal op set realizing an overlap; ``i`` and ``j`` are 0-based window positions."""

    type_tag: str
    ops: object
    i: int
    j: int = None

    @property
    def adjacent(self):
        if self.j is None:
            return False
        first = self.ops.ops[0]
        return self.j == first.touched()[-1] + 1

    @property
    def positions(self):
        return (self.i,) if self.j is None else (self.i, self.j)

    def to_dict(self):
        return {
            "type": self.type_tag,
            "ops": str(self.ops),
            "positions": [p + 1 for p in self.positions],
            "adjacent": self.adjacent,
        }


@dataclass(frozen=True)
class ErrorOverlap:
    shift: int
    length: int
    distance: int
    realizations: tuple = ()

    @property
    def type_tags(self):
        if self.distance == 0:
            return ("NONE",)
        if not self.realizations:
            return ("HIGHER",)
        tags = []
        for real in self.realizations:
            if real.type_tag not in tags:
                tags.append(real.type_tag)
        return tuple(tags)

    @property
    def type_tag(self):
        return self.type_tags[0]

    @property
    def error_positions(self):
        return self.realizations[0].positions if self.realizations else ()

    @property
    def adjacent(self):
        return bool(self.realizations) and self.realizations[0].adjacent

    def realization(self, tag):
        for real in self.realizations:
            if real.type_tag == tag:
                return real
        return None

    def digest(self):
        """Compact text such as ``r4:q2:SS@1,3`` (1-based positions)."""
        text = f"r{self.shift}:q{self.distance}"
        if self.realizations:
            parts = []
            for real in self.realizations:
                parts.append(real.type_tag + "@" + ",".join(str(p + 1) for p in real.positions))
            text += ":" + "|".join(parts)
        return text

    def to_dict(self):
        return {
            "shift": self.shift,
            "length": self.length,
            "distance": self.distance,
            "types": list(self.type_tags),
            "realizations": [real.to_dict() for real in self.realizations],
        }


def _realize(op_set):
    ops = op_set.ops
    tag = "".join(op.kind.value for op in ops)
    if len(ops) == 1:
        return Realization(tag, op_set, ops[0].position)
    return Realization(tag, op_set, ops[0].position, ops[1].position)


def overlap_at(f, shift):
    f = as_word(f)
    n = len(f)
    length = n - shift
    pre, suf = f[:length], f[shift:]
    q = tilde_distance(pre, suf)
    realizations = ()
    if 1 <= q <= 2:
        realizations = tuple(_realize(s) for s in minimal_op_sets(pre, suf))
    return ErrorOverlap(shift, length, q, realizations)


def error_overlaps(f):
    """One :class:`ErrorOverlap` per shift ``r = 1 .. n-1``.

    >>> [o.digest() for o in error_overlaps("101")]
    ['r1:q1:S@1', 'r2:q0']
    """
    f = as_word(f)
    require_binary(f)
    return [overlap_at(f, r) for r in range(1, len(f))]


def two_error_overlaps(f):
    return [o for o in error_overlaps(f) if o.distance == 2]


def has_swap_overlap(f):
    """True iff ``f`` has a 1-tilde-error overlap of type S."""
    return any(o.distance == 1 and o.type_tag == "S" for o in error_overlaps(f))


def has_prop2_overlap(f):
    """Necessary condition for tilde non-isometry: a type-S 1-error overlap or any 2-error overlap."""
    return any(o.distance == 2 or (o.distance == 1 and o.type_tag == "S") for o in error_overlaps(f))


def realization_condition(f, shift, real):
    """The three arithmetic clauses for one RR or SS realization."""
    if real.type_tag not in ("RR", "SS"):
        return False
    if shift % 2:
        return False
    half = shift // 2
    if real.j - real.i != half:
        return False
    s = str(f)
    return s[real.i:real.i + half] == s[real.j:real.j + half]


def condition_tilde(f, eo):
    """True iff some RR or SS realization of the 2-error overlap ``eo`` meets the periodicity clauses.

    The clauses are: the shift is even, the error positions are half a
    shift apart, and the two half-shift factors starting at the error
    positions are equal.
    """
    if eo.distance != 2:
        raise PreconditionError(f"condition needs a 2-tilde-error overlap, got q={eo.distance}")
    f = as_word(f)
    return any(realization_condition(f, eo.shift, real) for real in eo.realizations)


def ham_error_overlaps(f):
    """Hamming mismatch count between prefix and suffix, for each shift ``r = 1 .. n-1``."""
    f = as_word(f)
    require_binary(f)
    n = len(f)
    return [hamming_distance(f[:n - r], f[r:]) for r in range(1, n)]


def ham_isometric(f):
    """Hamming isometry: no overlap shift with exactly two mismatches.

    >>> ham_isometric("1010"), ham_isometric("111000")
    (True, False)
    """
    return 2 not in ham_error_overlaps(f)
