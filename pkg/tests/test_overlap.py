import pytest
from hypothesis import given, settings, strategies as st

from conftest import binary_strings, oracle_dist
from tildeiso.errors import PreconditionError
from tildeiso.overlap import (
    condition_tilde,
    error_overlaps,
    ham_error_overlaps,
    ham_isometric,
    has_prop2_overlap,
    has_swap_overlap,
    overlap_at,
    realization_condition,
    two_error_overlaps,
)
from tildeiso.words import Word, complement, reverse

words = st.text("01", min_size=2, max_size=14)
small_words = st.text("01", min_size=2, max_size=10)


def test_digests():
    assert [o.digest() for o in error_overlaps("101")] == ["r1:q1:S@1", "r2:q0"]
    assert overlap_at("10010110", 4).digest() == "r4:q2:SS@1,3"
    assert overlap_at("10011", 2).digest() == "r2:q2:SR@1,3"
    assert overlap_at("1100", 2).digest() == "r2:q2:RR@1,2"


def test_type_tags():
    eo = overlap_at("10010110", 4)
    assert eo.type_tag == "SS"
    assert eo.adjacent is True
    assert eo.realization("SS").positions == (0, 2)
    assert eo.realization("RR") is None


def test_condition_fixtures():
    assert condition_tilde("0011", overlap_at("0011", 2))
    assert condition_tilde("01011010", overlap_at("01011010", 4))
    assert not condition_tilde("10010110", overlap_at("10010110", 4))
    assert not condition_tilde("10011", overlap_at("10011", 2))
    with pytest.raises(PreconditionError):
        condition_tilde("101", overlap_at("101", 1))


def test_mixed_realizations_never_meet_condition():
    for n in range(3, 10):
        for f in binary_strings(n):
            for eo in two_error_overlaps(f):
                for real in eo.realizations:
                    if real.type_tag in ("SR", "RS"):
                        assert not realization_condition(f, eo.shift, real)


def test_hamming_view():
    assert ham_error_overlaps("111000") == [1, 2, 3, 2, 1]
    assert not ham_isometric("111000")
    assert ham_isometric("1010")


def test_prop2_overlap_absent_words():
    absent = {f for f in binary_strings(6) if not has_prop2_overlap(f)}
    assert absent == {"000000", "000001", "011111", "111111", "111110", "100000"}


@settings(deadline=None)
@given(small_words)
def test_overlap_distance_matches_oracle(f):
    n = len(f)
    for eo in error_overlaps(f):
        r = eo.shift
        assert eo.length == n - r
        assert eo.distance == oracle_dist(f[:n - r], f[r:])
        for real in eo.realizations:
            assert real.ops.apply(f[:n - r]) == Word(f[r:])
            assert len(real.ops) == eo.distance


@given(words)
def test_overlaps_commute_with_symmetry(f):
    base = [(o.shift, o.distance) for o in error_overlaps(f)]
    assert base == [(o.shift, o.distance) for o in error_overlaps(reverse(f))]
    assert base == [(o.shift, o.distance) for o in error_overlaps(complement(f))]
    assert has_swap_overlap(f) == has_swap_overlap(reverse(f))


@given(words)
def test_ham_isometry_definition(f):
    n = len(f)
    twos = any(sum(a != b for a, b in zip(f[:n - r], f[r:])) == 2 for r in range(1, n))
    assert ham_isometric(f) == (not twos)
