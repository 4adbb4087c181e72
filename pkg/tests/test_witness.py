import pytest

from conftest import binary_strings, brute_is_witness
from tildeiso.errors import PreconditionError
from tildeiso.overlap import has_prop2_overlap, overlap_at
from tildeiso.transform import is_witness_pair
from tildeiso.witness import (
    alpha_beta,
    build_case_pair,
    case4_decompositions,
    construct_witnesses,
    delta_pair,
    eta_gamma,
    eta_gamma_third_position,
    iter_constructions,
    matches_case5,
    sufficient_cases,
    witness_s1eo,
)
from tildeiso.words import Word


def strs(pair):
    return tuple(str(w) for w in pair)


def test_s1eo_fixture():
    assert strs(witness_s1eo("101", overlap_at("101", 1))) == ("1001", "1111")


def test_s1eo_needs_swap_overlap():
    # 01 overlaps itself with a single replacement, not a swap
    with pytest.raises(PreconditionError):
        witness_s1eo("01", overlap_at("01", 1))
    with pytest.raises(PreconditionError):
        witness_s1eo("1010", overlap_at("1010", 1))


def test_alpha_beta_for_10010110():
    pair = alpha_beta("10010110", overlap_at("10010110", 4))
    # the value obtained from the construction formula
    assert strs(pair) == ("100101010110", "100110100110")
    assert is_witness_pair("10010110", *pair).passed


def test_alpha_beta_precondition():
    with pytest.raises(PreconditionError):
        alpha_beta("101", overlap_at("101", 1))


def test_eta_gamma_rr():
    eo = overlap_at("0011", 2)
    real = eo.realizations[0]
    assert eta_gamma_third_position("0011", eo, real) == 2
    pair = eta_gamma("0011", eo)
    assert strs(pair) == ("0010111", "0001011")
    assert is_witness_pair("0011", *pair).passed


def test_eta_gamma_ss():
    eo = overlap_at("01011010", 4)
    pair = eta_gamma("01011010", eo)
    assert strs(pair) == ("01011001101010", "01010110011010")
    verdict = is_witness_pair("01011010", *pair)
    assert verdict.passed and verdict.distance == 3


def test_eta_gamma_needs_condition():
    with pytest.raises(PreconditionError):
        eta_gamma("10010110", overlap_at("10010110", 4))


def test_delta_case4():
    assert case4_decompositions("10011") == [("10", "", "1")]
    pair = delta_pair("10011", overlap_at("10011", 2), 4)
    assert strs(pair) == ("1001011", "1010101")
    assert is_witness_pair("10011", *pair).passed
    with pytest.raises(PreconditionError):
        delta_pair("1010", case=4)


def test_delta_case5():
    assert matches_case5("1100")
    pair = delta_pair("1100", overlap_at("1100", 2), 5)
    assert strs(pair) == ("110100", "101010")
    assert is_witness_pair("1100", *pair).passed
    # the plain pair from the same overlap collapses to distance 1
    assert is_witness_pair("1100", *alpha_beta("1100", overlap_at("1100", 2))).distance == 1
    with pytest.raises(PreconditionError):
        delta_pair("1100", overlap_at("1100", 1), 5)
    with pytest.raises(PreconditionError):
        delta_pair("1100", case=7)


def test_construct_fixtures():
    c = construct_witnesses("1010")
    assert c.kind == "ALPHA_BETA" and strs(c.pair) == ("10110", "11000")
    c = construct_witnesses("10010110")
    assert c.kind == "ALPHA_BETA" and strs(c.pair) == ("1001010110", "1010011010")
    assert construct_witnesses("111000") is None
    assert construct_witnesses("1") is None


def test_construction_record():
    c = construct_witnesses("0011")
    d = c.to_dict()
    assert d["verified"] is True
    assert d["pair"] == list(strs(c.pair))
    assert c.verdict.f == Word("0011")


def test_mapped_back_constructions_hold_for_f():
    for c in iter_constructions("1101"):
        assert is_witness_pair("1101", *c.pair).passed
        assert c.transform in ("id", "rev", "comp", "comprev")


@pytest.mark.parametrize("n", range(2, 6))
def test_constructions_agree_with_oracle(n):
    for f in binary_strings(n):
        c = construct_witnesses(f)
        if c is None:
            continue
        assert has_prop2_overlap(f)
        assert brute_is_witness(f, *strs(c.pair))


def test_case_pairs_for_small_words():
    for f in binary_strings(6):
        for inst in sufficient_cases(f):
            pair = build_case_pair(inst)
            assert len(pair[0]) == len(pair[1])
