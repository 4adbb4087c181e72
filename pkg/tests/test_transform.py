from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import binary_strings, brute_free_minimal_exists, brute_is_witness, naive_contains
from tildeiso.distance import EditOp, minimal_op_sets, tilde_distance
from tildeiso.errors import BudgetExceededError, InapplicableOpError, LengthMismatchError
from tildeiso.transform import (
    Transformation,
    enumerate_minimal_transformations,
    exists_f_free_minimal_transformation,
    is_witness_pair,
    parse_ops,
)
from tildeiso.words import Word


def words_and_pattern():
    return st.integers(3, 8).flatmap(lambda m: st.tuples(
        st.text("01", min_size=m, max_size=m),
        st.text("01", min_size=m, max_size=m),
        st.text("01", min_size=1, max_size=min(m, 5))))


def test_transformation_rendering():
    t = Transformation("1011", parse_ops("S1 R4"))
    assert str(t) == "1011 -S1-> 0111 -R4-> 0110"
    assert t.target == Word("0110")
    assert t.is_minimal()
    assert t.first_occurrence("11") == (0, 2)
    assert not Transformation("1011", parse_ops("R1 R1")).touches_once()


def test_parse_ops_errors():
    assert parse_ops(["S2", "R4"]) == [EditOp.swap(1), EditOp.replace(3)]
    with pytest.raises(InapplicableOpError):
        parse_ops("S")
    with pytest.raises(InapplicableOpError):
        parse_ops([""])


def test_enumeration_counts():
    found = enumerate_minimal_transformations("010", "101")
    assert len(found) == 2 * factorial(2)
    assert all(t.is_minimal() and t.target == Word("101") for t in found)
    with pytest.raises(BudgetExceededError):
        enumerate_minimal_transformations("010", "101", limit=3)


def test_enumeration_budget(budget_env):
    budget_env("enumerate=2")
    with pytest.raises(BudgetExceededError):
        enumerate_minimal_transformations("000", "111")


def test_search_budget(budget_env):
    budget_env("search=2")
    with pytest.raises(BudgetExceededError):
        exists_f_free_minimal_transformation("0000", "1111", "0101")


def test_witness_fixtures():
    assert is_witness_pair("1010", "11000", "10110").passed
    assert is_witness_pair("101", "1001", "1111").passed
    assert is_witness_pair("10010110", "100101010110", "100110100110").passed


def test_witness_clause_reporting():
    verdict = is_witness_pair("11", "0101", "1010")
    assert verdict.failed_clauses() == [3]
    assert verdict.free_transformation.is_f_free("11")
    bad = is_witness_pair("11", "0110", "0101")
    assert 1 in bad.failed_clauses()
    near = is_witness_pair("111", "0000", "0001")
    assert near.failed_clauses() == [2, 3]
    with pytest.raises(LengthMismatchError):
        is_witness_pair("1", "00", "000")


def test_blocking_evidence_points_at_f():
    verdict = is_witness_pair("1010", "11000", "10110")
    assert verdict.blocking_evidence
    for b in verdict.blocking_evidence:
        assert str(b.word)[b.occurrence:b.occurrence + 4] == "1010"
        assert b.to_dict()["occurrence"] == b.occurrence + 1


@settings(max_examples=300)
@given(words_and_pattern())
def test_free_search_matches_sequence_oracle(case):
    u, v, f = case
    found = exists_f_free_minimal_transformation(u, v, f)
    assert (found is not None) == brute_free_minimal_exists(u, v, f)
    if found is not None:
        assert found.is_minimal() and found.is_f_free(f) and found.target == Word(v)


@pytest.mark.parametrize("f", ["11", "101", "1010", "0110"])
def test_witness_verdicts_exhaustive_small(f):
    for m in range(len(f) + 1, len(f) + 3):
        words = [w for w in binary_strings(m) if not naive_contains(f, w)]
        for u in words:
            for v in words:
                assert is_witness_pair(f, u, v).passed == brute_is_witness(f, u, v)


def test_each_reported_set_reaches_target():
    for s in minimal_op_sets("110100", "101010"):
        assert len(s) == tilde_distance("110100", "101010")
