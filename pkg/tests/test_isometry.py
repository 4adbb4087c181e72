import pytest

from conftest import binary_strings, brute_is_witness, naive_contains, oracle_dist
from tildeiso.errors import BudgetExceededError
from tildeiso.isometry import (
    ISOMETRIC_UP_TO,
    NON_ISOMETRIC,
    UNKNOWN,
    audit_prop2,
    audit_subgraph_distances,
    brute_force_isometric,
    classify,
    free_op_graph,
)
from tildeiso.words import Word


def naive_first_witness(f, max_len):
    for m in range(len(f) + 1, max_len + 1):
        words = [w for w in binary_strings(m) if not naive_contains(f, w)]
        for a, u in enumerate(words):
            for v in words[a + 1:]:
                if brute_is_witness(f, u, v):
                    return u, v
    return None


@pytest.mark.parametrize("f", binary_strings(2) + binary_strings(3) + ["1010", "0110", "1100"])
def test_brute_force_matches_naive_search(f):
    max_len = len(f) + 2
    result = brute_force_isometric(f, max_len)
    expected = naive_first_witness(f, max_len)
    got = None if result.witness is None else tuple(str(w) for w in result.witness)
    assert got == expected


def test_brute_force_fixtures():
    assert brute_force_isometric("1010", 5).witness == (Word("01100"), Word("10010"))
    result = brute_force_isometric("11", 6)
    assert not result.found and result.pairs_checked > 0


def test_brute_force_budget(budget_env):
    budget_env("brute=6")
    with pytest.raises(BudgetExceededError):
        brute_force_isometric("11", 7)
    assert classify("11", 7).tilde_status == UNKNOWN


def test_classify_constructive():
    report = classify("1010", 8)
    assert report.tilde_status == NON_ISOMETRIC
    assert report.ham_status == "isometric"
    assert report.witness_kind == "ALPHA_BETA"
    assert report.prop2_consistent
    assert report.to_dict()["evidence"]["type"] == "construction"


def test_classify_isometric_up_to():
    report = classify("11", 6)
    assert report.tilde_status == ISOMETRIC_UP_TO
    assert report.tilde_label == "isometric-up-to-6"
    assert report.witness_pair is None
    assert report.evidence()["type"] == "exhaustion"


def test_classify_brute_force_witness():
    # 0001 has no qualifying overlap, so only the brute force can decide it
    report = classify("0001", 7)
    assert not report.has_prop2_overlap
    assert report.tilde_status == ISOMETRIC_UP_TO


def test_audit_prop2_small():
    for n in range(1, 5):
        assert audit_prop2(n) == []


def test_free_op_graph_degrees():
    words, graph = free_op_graph("11", 4)
    assert [format(int(w), "04b") for w in words] == ["0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"]
    assert graph.nnz > 0


@pytest.mark.parametrize("f,m,count", [("11", 6, 0), ("1010", 5, 4)])
def test_subgraph_audit(f, m, count):
    found = audit_subgraph_distances(f, m)
    assert len(found) == count
    for c in found:
        assert c.tilde_distance == oracle_dist(str(c.u), str(c.v))
        assert c.subgraph_distance == -1 or c.subgraph_distance > c.tilde_distance


def test_subgraph_budget(budget_env):
    budget_env("subgraph=4")
    with pytest.raises(BudgetExceededError):
        audit_subgraph_distances("11", 5)
