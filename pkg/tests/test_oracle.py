import itertools

import pytest
from hypothesis import given, strategies as st

from cdawg_lab import oracle

FIG = "ababcababd"


@pytest.mark.parametrize("t, w, expected", [
    ("abab", "ab", [1, 3]),
    ("abab", "", [1, 2, 3, 4, 5]),
    ("ababcababd", "abab", [1, 6]),
    ("aaa", "aa", [1, 2]),
    ("abab", "c", []),
])
def test_occurrences(t, w, expected):
    assert oracle.occurrences(t, w) == expected


@pytest.mark.parametrize("t, w, left, right", [
    ("abab", "ab", True, True),
    ("abab", "a", True, False),
    (FIG, "b", False, True),
    (FIG, "ab", True, True),
    (FIG, FIG, True, True),
    (FIG, "", True, True),
])
def test_maximality(t, w, left, right):
    assert oracle.is_left_maximal(t, w) is left
    assert oracle.is_right_maximal(t, w) is right


@pytest.mark.parametrize("t, expected", [
    (FIG, {"", "ab", "abab", FIG}),
    ("a", {"", "a"}),
    ("aaaa", {"", "a", "aa", "aaa", "aaaa"}),
])
def test_maximal_substrings(t, expected):
    assert set(oracle.maximal_substrings(t)) == expected


def test_maximal_set_helpers():
    m = oracle.maximal_substrings(FIG)
    assert list(m) == ["", "ab", "abab", FIG]
    assert m.repeats == {"", "ab", "abab"}
    assert m.is_whole_string(FIG) and not m.is_whole_string("ab")
    assert "abc" not in m


@pytest.mark.parametrize("t, x, expected", [
    (FIG, "ab", 3),
    (FIG, FIG, 0),
    (FIG, "", 4),
])
def test_out_degree(t, x, expected):
    assert oracle.out_degree(t, x) == expected


def test_out_degree_rejects_non_maximal():
    with pytest.raises(oracle.NotMaximal):
        oracle.out_degree(FIG, "b")


@pytest.mark.parametrize("t, expected", [("a", 1), (FIG, 9), ("aaaa", 4), ("", 0)])
def test_size(t, expected):
    assert oracle.cdawg_size_oracle(t) == expected


@pytest.mark.parametrize("fn, w, expected", [
    (oracle.rrep, "a", "ab"),
    (oracle.lrep, "b", "ab"),
    (oracle.lrep, "", ""),
    (oracle.rrep, "c", "cababd"),
    (oracle.lrep, "c", "ababc"),
])
def test_reps(fn, w, expected):
    assert fn(FIG, w) == expected


def test_reps_reject_absent_pattern():
    with pytest.raises(oracle.NotASubstring):
        oracle.lrep(FIG, "ba" * 3)


def _substrings(t):
    return {t[i:j] for i in range(len(t) + 1) for j in range(i, len(t) + 1)}


texts = st.text(alphabet="abc", min_size=1, max_size=12)


@given(texts)
def test_rep_closures(t):
    m = oracle.maximal_substrings(t)
    for w in _substrings(t):
        lw, rw = oracle.lrep(t, w), oracle.rrep(t, w)
        assert lw.endswith(w) and rw.startswith(w)
        assert oracle.occurrence_count(t, lw) == oracle.occurrence_count(t, w)
        assert oracle.occurrence_count(t, rw) == oracle.occurrence_count(t, w)
        assert oracle.lrep(t, lw) == lw and oracle.rrep(t, rw) == rw
        both = oracle.lrep(t, rw)
        assert both == oracle.rrep(t, lw)
        assert both in m
        assert (w in m) == (both == w)


@given(texts)
def test_size_bound(t):
    if len(t) >= 2:
        assert oracle.cdawg_size_oracle(t) <= 2 * len(t) - 2


@pytest.mark.parametrize("t", ["".join(p) for n in range(1, 7) for p in itertools.product("ab", repeat=n)])
def test_size_is_sum_of_degrees(t):
    assert oracle.cdawg_size_oracle(t) == sum(oracle.out_degree(t, x) for x in oracle.maximal_substrings(t))
