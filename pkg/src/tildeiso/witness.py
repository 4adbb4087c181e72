"""Constructive witness pairs built from the error overlaps of ``f``.

Every builder returns a pair of words of equal length.  Builders only follow
their formula; whether the pair really is a witness pair is decided by
:func:`tildeiso.transform.is_witness_pair`, and :func:`construct_witnesses`
never reports a pair that verifier rejected.
"""

from dataclasses import dataclass, field

from .distance import EditOp, OpKind, apply_op
from .errors import InapplicableOpError, PreconditionError
from .overlap import error_overlaps, realization_condition
from .transform import is_witness_pair
from .words import Word, as_word, complement, require_binary, reverse

KINDS = ("S1EO", "ALPHA_BETA", "ETA_GAMMA", "DELTA_CASE4", "DELTA_CASE5")

TRANSFORMS = {
    "id": lambda w: w,
    "rev": reverse,
    "comp": complement,
    "comprev": lambda w: complement(reverse(w)),
}


def _pick(eo, realization, allowed=None):
    if realization is None:
        if not eo.realizations:
            raise PreconditionError(f"overlap at shift {eo.shift} has no realization")
        realization = eo.realizations[0]
    if allowed and realization.type_tag not in allowed:
        raise PreconditionError(f"needs a realization of type {'/'.join(allowed)}, got {realization.type_tag}")
    return realization


def witness_s1eo(f, eo, realization=None):
    """Pair for a 1-error overlap of type S at position ``i`` and shift ``r``.

    ``u = prefix(f, r) + R_i(f)`` and ``v = prefix(f, r) + R_{i+1}(f)``.

    >>> tuple(map(str, witness_s1eo("101", error_overlaps("101")[0])))
    ('1001', '1111')
    """
    f = as_word(f)
    if eo.distance != 1:
        raise PreconditionError(f"needs a 1-tilde-error overlap, got q={eo.distance}")
    real = _pick(eo, realization, ("S",))
    head = f[:eo.shift]
    u = head + apply_op(f, EditOp.replace(real.i))
    v = head + apply_op(f, EditOp.replace(real.i + 1))
    return u, v


def _ops_at(real):
    first, second = real.ops.ops
    return first, second


def alpha_beta(f, eo, realization=None):
    """``(prefix(f, r) + O_i(f), prefix(f, r) + O_j(f))`` for a 2-tilde-error overlap.

    ``O_i`` and ``O_j`` are the operations of the chosen realization, applied
    to ``f`` at the same positions they have in the overlap window.
    """
    f = as_word(f)
    if eo.distance != 2:
        raise PreconditionError(f"needs a 2-tilde-error overlap, got q={eo.distance}")
    real = _pick(eo, realization)
    op_i, op_j = _ops_at(real)
    head = f[:eo.shift]
    return head + apply_op(f, op_i), head + apply_op(f, op_j)


def third_op_candidates(f, eo, real):
    """Positions ``t`` for the third operation, most natural first.

    ``j + r/2`` continues the period forced by the condition; the rest of
    the word follows in increasing order.
    """
    n = len(f)
    kind = real.ops.ops[0].kind
    last = n - 1 if kind is OpKind.SWAP else n
    natural = real.j + eo.shift // 2
    order = [natural] + [t for t in range(last) if t != natural]
    return [t for t in order if 0 <= t < last and t not in (real.i, real.j)]


def _eta_gamma_with(f, eo, real, t):
    op_i, op_j = _ops_at(real)
    op_t = EditOp(op_i.kind, t)
    head, tail = f[:eo.shift], f[len(f) - eo.shift // 2:]
    eta = head + apply_op(f, op_i) + tail
    gamma = head + apply_op(apply_op(f, op_t), op_j) + tail
    return eta, gamma


def eta_gamma(f, eo, realization=None, t=None):
    """Three-error pair for an RR or SS overlap meeting the periodicity condition.

    ``eta = prefix(f, r) + O_i(f) + suffix(f, r/2)`` and
    ``gamma = prefix(f, r) + O_j(O_t(f)) + suffix(f, r/2)``.  When ``t`` is
    not given it is searched over :func:`third_op_candidates` and the first
    position whose pair verifies is used; see :func:`eta_gamma_third_position`.
    """
    f = as_word(f)
    if eo.distance != 2:
        raise PreconditionError(f"needs a 2-tilde-error overlap, got q={eo.distance}")
    real = _pick(eo, realization, ("RR", "SS"))
    if not realization_condition(f, eo.shift, real):
        raise PreconditionError(f"overlap at shift {eo.shift} does not satisfy the condition")
    if t is None:
        t = eta_gamma_third_position(f, eo, real)
    return _eta_gamma_with(f, eo, real, t)


def eta_gamma_third_position(f, eo, real):
    """First candidate ``t`` whose pair verifies; the natural ``j + r/2`` if none does."""
    f = as_word(f)
    candidates = third_op_candidates(f, eo, real)
    for t in candidates:
        try:
            pair = _eta_gamma_with(f, eo, real, t)
        except InapplicableOpError:
            continue
        if is_witness_pair(f, *pair).passed:
            return t
    if not candidates:
        raise PreconditionError("no position available for the third operation")
    return candidates[0]


def case4_decompositions(f):
    """Every split ``f = w2 1001 w3 = w1 w2 011`` with ``|w1| >= 1``, as ``(w1, w2, w3)``."""
    s = str(f)
    n = len(s)
    out = []
    for p in range(n - 3):
        if s[p:p + 4] != "1001":
            continue
        w2, w3 = s[:p], s[p + 4:]
        r = n - len(w2) - 3
        if r >= 1 and s.endswith(w2 + "011"):
            out.append((s[:r], w2, w3))
    return out


def matches_case5(f):
    s = str(f)
    return len(s) >= 4 and s.startswith("110") and s.endswith("100")


def delta_pair(f, eo=None, case=4):
    """Pair with the swapped-block word used when the standard pair fails.

    Case 4, for ``f = w2 1001 w3 = w1 w2 011``:
    ``(w1 w2 0101 w3, w1 w2 1010 w3)``.
    Case 5, for ``f = 110 w1 = w2 100``: ``(w2 1010 w1, w2 0101 w1)``.
    With an overlap given, only the decomposition of that shift qualifies.
    """
    f = as_word(f)
    require_binary(f)
    s = str(f)
    n = len(s)
    if case == 4:
        for w1, w2, w3 in case4_decompositions(f):
            if eo is None or eo.shift == len(w1):
                return Word(w1 + w2 + "0101" + w3), Word(w1 + w2 + "1010" + w3)
        raise PreconditionError(f"{f} has no decomposition w2 1001 w3 = w1 w2 011"
                                + ("" if eo is None else f" with shift {eo.shift}"))
    if case == 5:
        if not matches_case5(f):
            raise PreconditionError(f"{f} does not start with 110 and end with 100")
        if eo is not None and (eo.shift != n - 2 or eo.realization("RR") is None):
            raise PreconditionError(f"case 5 uses the RR overlap of shift {n - 2}")
        w1, w2 = s[3:], s[:n - 3]
        return Word(w2 + "1010" + w1), Word(w2 + "0101" + w1)
    raise PreconditionError(f"delta_pair case must be 4 or 5, got {case}")


@dataclass(frozen=True)
class Construction:
    """A formula-built pair for ``f`` together with its independent verdict.

    ``base`` is the word the formula was applied to: ``f`` itself or its
    reverse / complement, as named by ``transform``; ``source_overlap`` is
    an overlap of ``base``.  ``pair`` and ``verdict`` are always about ``f``.
    """

    kind: str
    f: Word
    transform: str
    base: Word
    source_overlap: object
    realization: object
    pair: tuple
    verdict: object
    params: dict = field(default_factory=dict)

    def to_dict(self):
        out = {
            "kind": self.kind,
            "f": str(self.f),
            "transform": self.transform,
            "base": str(self.base),
            "shift": self.source_overlap.shift,
            "overlap": self.source_overlap.digest(),
            "realization": None if self.realization is None else self.realization.type_tag,
            "pair": [str(w) for w in self.pair],
            "verified": self.verdict.passed,
            "verdict": self.verdict.to_dict(),
        }
        if self.params:
            out["params"] = dict(sorted(self.params.items()))
        return out


def _candidates(g):
    """``(kind, overlap, realization, params, builder)`` in deterministic order for word ``g``."""
    n = len(g)
    case4 = case4_decompositions(g)
    case5 = matches_case5(g)
    for eo in error_overlaps(g):
        if eo.distance == 1 and eo.type_tag == "S":
            real = eo.realizations[0]
            yield "S1EO", eo, real, {}, lambda eo=eo, real=real: witness_s1eo(g, eo, real)
        if eo.distance != 2:
            continue
        for real in eo.realizations:
            yield "ALPHA_BETA", eo, real, {}, lambda eo=eo, real=real: alpha_beta(g, eo, real)
            if realization_condition(g, eo.shift, real):
                natural = real.j + eo.shift // 2
                for t in third_op_candidates(g, eo, real):
                    # only the adjacent SS layout pins t = j + 2 explicitly
                    pinned = real.type_tag == "SS" and real.adjacent and t == natural
                    params = {"t": t + 1, "t_reconstructed": not pinned}
                    yield ("ETA_GAMMA", eo, real, params,
                           lambda eo=eo, real=real, t=t: _eta_gamma_with(g, eo, real, t))
            if any(len(w1) == eo.shift for w1, _, _ in case4):
                yield "DELTA_CASE4", eo, real, {}, lambda eo=eo: delta_pair(g, eo, 4)
            if case5 and eo.shift == n - 2 and real.type_tag == "RR":
                yield "DELTA_CASE5", eo, real, {}, lambda eo=eo: delta_pair(g, eo, 5)


def distinct_transforms(f):
    seen = set()
    for name, fn in TRANSFORMS.items():
        g = fn(f)
        if g.symbols not in seen:
            seen.add(g.symbols)
            yield name, g


def iter_constructions(f, verified_only=True):
    """Every formula-built pair for ``f`` (and its reverse/complement images), verified on ``f``."""
    f = as_word(f)
    require_binary(f)
    if len(f) < 2:
        return
    for name, g in distinct_transforms(f):
        back = TRANSFORMS[name]
        tried = set()
        for kind, eo, real, params, build in _candidates(g):
            try:
                u, v = build()
            except (InapplicableOpError, PreconditionError):
                continue
            key = (kind, u.symbols, v.symbols)
            if key in tried:
                continue
            tried.add(key)
            if verified_only and not is_witness_pair(g, u, v).passed:
                continue
            pair = (back(u), back(v))
            verdict = is_witness_pair(f, *pair)
            if verified_only and not verdict.passed:
                continue
            yield Construction(kind, f, name, g, eo, real, pair, verdict, params)


def construct_witnesses(f):
    """First verified :class:`Construction` for ``f``, or None.

    Overlaps of ``f``, ``reverse(f)``, ``complement(f)`` and
    ``complement(reverse(f))`` are tried in that order, shift by shift; for
    each overlap the builders run in the order S1EO (1-error swap overlaps),
    ALPHA_BETA, ETA_GAMMA, DELTA_CASE4, DELTA_CASE5.  None does not mean
    ``f`` is isometric.

    >>> construct_witnesses("1010").kind
    'ALPHA_BETA'
    """
    return next(iter_constructions(f), None)


@dataclass(frozen=True)
class CaseInstance:
    """One way ``f`` (or a reverse/complement image ``base``) meets a sufficient case.

    Cases: 1 non-adjacent 2-error overlap; 2 adjacent SS overlap; 3 block
    101 against 010; 4 ``w2 1001 w3 = w1 w2 011``; 5 starts 110, ends 100.
    """

    case: int
    transform: str
    base: Word
    overlap: object
    realization: object
    kind: str


def _block(g, eo, real):
    s = str(g)
    i = real.i
    return s[i:i + 3], s[eo.shift + i:eo.shift + i + 3]


def sufficient_cases(f):
    f = as_word(f)
    require_binary(f)
    out = []
    for name, g in distinct_transforms(f):
        n = len(g)
        for eo in error_overlaps(g):
            if eo.distance != 2:
                continue
            block3_done = False
            for real in eo.realizations:
                cond = realization_condition(g, eo.shift, real)
                standard = "ETA_GAMMA" if cond else "ALPHA_BETA"
                if not real.adjacent:
                    out.append(CaseInstance(1, name, g, eo, real, standard))
                elif real.type_tag == "SS":
                    out.append(CaseInstance(2, name, g, eo, real, standard))
                if (real.adjacent and real.type_tag in ("SR", "RS") and not block3_done
                        and _block(g, eo, real) in (("101", "010"), ("010", "101"))):
                    sr = eo.realization("SR")
                    out.append(CaseInstance(3, name, g, eo, sr, "ALPHA_BETA"))
                    block3_done = True
            if any(len(w1) == eo.shift for w1, _, _ in case4_decompositions(g)):
                real = eo.realization("SR") or eo.realizations[0]
                out.append(CaseInstance(4, name, g, eo, real, "DELTA_CASE4"))
            if matches_case5(g) and eo.shift == n - 2 and eo.realization("RR") is not None:
                out.append(CaseInstance(5, name, g, eo, eo.realization("RR"), "DELTA_CASE5"))
    return out


def build_case_pair(inst):
    """The designated pair of a :class:`CaseInstance`, on ``inst.base``."""
    g, eo, real = inst.base, inst.overlap, inst.realization
    if inst.kind == "ALPHA_BETA":
        return alpha_beta(g, eo, real)
    if inst.kind == "ETA_GAMMA":
        return eta_gamma(g, eo, real)
    if inst.kind == "DELTA_CASE4":
        return delta_pair(g, eo, 4)
    return delta_pair(g, eo, 5)
