import csv
import io
from fractions import Fraction

import pytest

from cdawg_lab import oracle
from cdawg_lab.sensitivity import (
    FamilySpec, canonical, exhaustive_scan, family, fibonacci, ms_for_string,
    size, thue_morse, unary_b,
)


@pytest.mark.parametrize("fn, k, word", [
    (fibonacci, 1, "b"),
    (fibonacci, 2, "a"),
    (fibonacci, 5, "abaab"),
    (thue_morse, 3, "abbabaab"),
    (unary_b, 5, "aaaab"),
    (unary_b, 1, "b"),
])
def test_families(fn, k, word):
    assert fn(k) == word


@pytest.mark.parametrize("fn", [fibonacci, thue_morse, unary_b])
def test_families_reject_zero(fn):
    with pytest.raises(ValueError):
        fn(0)


def test_family_lookup():
    assert family(FamilySpec("fibonacci", 6)) == "abaababa"
    with pytest.raises(ValueError):
        family(FamilySpec("sturmian", 3))


@pytest.mark.parametrize("k", range(3, 12))
def test_fibonacci_recurrence(k):
    assert fibonacci(k) == fibonacci(k - 1) + fibonacci(k - 2)


@pytest.mark.parametrize("word", [fibonacci(9), thue_morse(4), unary_b(12)])
def test_size_matches_oracle(word):
    assert size(word) == oracle.cdawg_size_oracle(word)


def test_size_of_empty():
    assert size("") == 0


def test_ms_insertion_example():
    res = ms_for_string("abab", ("ins",), "abc")
    row = next(r for r in res.rows if r.op == "ins@3=c")
    assert (row.e_old, row.e_new, row.ratio) == (3, 4, Fraction(4, 3))
    assert res.worst.ratio >= row.ratio


@pytest.mark.parametrize("t, kinds, alphabet, ratio", [
    ("a", ("sub",), "ab", Fraction(1)),
    ("aaaa", ("del",), "a", Fraction(3, 4)),
])
def test_ms_examples(t, kinds, alphabet, ratio):
    assert ms_for_string(t, kinds, alphabet).ratio == ratio


def test_ms_rejects_empty():
    with pytest.raises(ValueError):
        ms_for_string("")


def test_ratio_at_most_one_for_unary_deletions():
    rep = exhaustive_scan(8, "a", kinds=("del",), budget=0)
    assert rep.rows and all(r.ratio <= 1 for r in rep.rows)


def test_small_scan_within_bound():
    rep = exhaustive_scan(8, "ab", budget=0)
    assert rep.complete and rep.strings == 510
    assert not rep.bound_violations
    assert rep.worst().ratio < 8


@pytest.mark.parametrize("t, letters, expected", [
    ("bab", "ab", "aba"),
    ("cab", "abc", "abc"),
    ("aab", None, "aab"),
])
def test_canonical(t, letters, expected):
    assert canonical(t, letters) == expected


def test_dedupe_keeps_canonical_strings():
    full = exhaustive_scan(5, "ab", budget=0)
    half = exhaustive_scan(5, "ab", budget=0, dedupe=True)
    assert half.strings * 2 == full.strings
    assert half.worst().ratio == full.worst().ratio


def test_csv_layout():
    rep = exhaustive_scan(2, "ab", kinds=("del",), budget=0)
    rows = list(csv.reader(io.StringIO(rep.csv_text())))
    assert rows[0] == ["text", "op", "e_T", "e_T'", "ratio"]
    assert rows[1] == ["a", "del@1", "1", "0", "0.000000"]
    assert len(rows) == 1 + len(rep.rows)


def test_parallel_scan_is_deterministic():
    one = exhaustive_scan(6, "ab", edit_alphabet="abc", verify=True, jobs=1, budget=0)
    two = exhaustive_scan(6, "ab", edit_alphabet="abc", verify=True, jobs=2, budget=0)
    assert one.csv_text() == two.csv_text()
    assert one.summary() == two.summary()


def test_budget_marks_report_incomplete():
    rep = exhaustive_scan(9, "ab", verify=True, budget=1e-9)
    assert not rep.complete
    assert 0 < rep.strings < 1022


def test_summary_fields():
    s = exhaustive_scan(4, "ab", edit_alphabet="abc", budget=0).summary()
    assert s["bound_violations"] == 0
    assert set(s["worst_by_kind"]) == {"ins", "del", "sub"}
    assert s["worst"]["ratio"] == str(Fraction(s["worst"]["e_T'"], s["worst"]["e_T"]))
