import pytest
from hypothesis import given, strategies as st

from conftest import naive_contains
from tildeiso.budget import Budget, current_budget, parse_budget
from tildeiso.errors import BoundsError, InvalidWordError, TildeError, UnsupportedAlphabetError
from tildeiso.words import (
    Word,
    all_words,
    borders,
    complement,
    find_factor,
    is_f_free,
    is_factor,
    prefix,
    reverse,
    suffix,
)

binary = st.text(alphabet="01", max_size=20)


def test_invalid_symbol_names_position():
    with pytest.raises(InvalidWordError) as info:
        Word("1021")
    assert info.value.position == 3
    assert "position 3" in str(info.value)


def test_bad_alphabet():
    with pytest.raises(UnsupportedAlphabetError):
        Word("00", "00")
    with pytest.raises(UnsupportedAlphabetError):
        complement(Word("012", "012"))


def test_packed_form_and_order():
    assert Word("1011").bits == 11
    assert Word.from_bits(11, 6) == Word("001011")
    assert Word("0111") < Word("1000")
    with pytest.raises(BoundsError):
        Word.from_bits(16, 4)
    with pytest.raises(UnsupportedAlphabetError):
        Word("012", "012").bits


def test_slicing_and_concat():
    w = Word("110100")
    assert w[1:4] == Word("101")
    assert w[0] == "1"
    assert Word("10") + Word("01") == Word("1001")
    assert Word("01") in w


def test_prefix_suffix_bounds():
    assert prefix("10010", 2) == Word("10")
    assert suffix("10010", 2) == Word("10")
    assert prefix("10", 0) == Word("")
    with pytest.raises(BoundsError):
        prefix("10", 3)
    with pytest.raises(BoundsError):
        suffix("10", -1)


def test_factor_helpers():
    assert is_factor("", "101")
    assert is_factor("101", "0101")
    assert not is_f_free("0101", "101")
    assert find_factor("01", "1010", 0) == 1
    assert find_factor("01", "1010", 2) == -1


def test_borders():
    assert borders("10010110") == [2]
    assert borders("10101") == [1, 3]
    assert borders("1") == []


def test_all_words_order():
    assert [str(w) for w in all_words(2)] == ["00", "01", "10", "11"]
    assert len(list(all_words(2, "abc"))) == 9


@given(binary, binary)
def test_factor_matches_scan(f, w):
    assert is_factor(f, w) == naive_contains(f, w)


@given(binary)
def test_involutions(w):
    assert reverse(reverse(w)) == Word(w)
    assert complement(complement(w)) == Word(w)
    assert complement(reverse(w)) == reverse(complement(w))


@given(binary, binary)
def test_freeness_respects_symmetry(f, w):
    assert is_f_free(w, f) == is_f_free(reverse(w), reverse(f))
    assert is_f_free(w, f) == is_f_free(complement(w), complement(f))


def test_budget_parsing(budget_env):
    assert parse_budget("") == Budget()
    assert parse_budget("brute=12, search=3").brute == 12
    with pytest.raises(TildeError):
        parse_budget("nope=1")
    with pytest.raises(TildeError):
        parse_budget("brute=x")
    budget_env("oracle=5")
    assert current_budget().oracle == 5
