import itertools

import pytest
from hypothesis import given, strategies as st

from cdawg_lab import oracle
from cdawg_lab.crossing import (
    CONTAINS, TOUCH_LEFT, TOUCH_RIGHT, CrossingError, analyze, classify_type,
    compute_j, crossing_occurrences, decompose,
)
from cdawg_lab.edits import apply_edit, enumerate_edits


def _starts(ctx, x):
    return [(o.start, o.contact) for o in crossing_occurrences(ctx, x)]


def test_example_starts(example_ctx):
    assert [o.start for o in crossing_occurrences(example_ctx, "abcabc")] == [9, 12]


def test_touching_both_sides(abab_ins):
    assert _starts(abab_ins, "ab") == [(1, TOUCH_LEFT), (4, TOUCH_RIGHT)]
    assert _starts(abab_ins, "b") == [(2, TOUCH_LEFT)]


@pytest.mark.parametrize("x, start, p, s", [
    ("abcabc", 9, "abca", "bc"),
    ("cabcabcdabcab", 11, "ca", "bcabcdabcab"),
])
def test_example_decomposition(example_ctx, x, start, p, s):
    occ = next(o for o in crossing_occurrences(example_ctx, x) if o.start == start)
    assert occ.contact == CONTAINS
    d = decompose(example_ctx, occ)
    assert (d.p, d.s) == (p, s)


def test_touching_decomposition(abab_ins):
    left, right = crossing_occurrences(abab_ins, "ab")
    assert (decompose(abab_ins, left).p, decompose(abab_ins, left).s) == ("ab", "")
    assert (decompose(abab_ins, right).p, decompose(abab_ins, right).s) == ("", "ab")


def test_types(example_ctx, abab_ins):
    assert classify_type(example_ctx, "abcabc").kind == "V"
    assert classify_type(abab_ins, "ab").kind == "V"
    assert classify_type(abab_ins, "b").kind == "I"


def test_j(example_ctx, abab_ins):
    assert compute_j(example_ctx, "cabcabcdabcab") == "bcabcdabca"
    assert compute_j(abab_ins, "ab") == "ab"
    with pytest.raises(CrossingError):
        compute_j(abab_ins, "b")


def test_errors(abab_ins):
    with pytest.raises(CrossingError):
        crossing_occurrences(abab_ins, "")
    with pytest.raises(CrossingError):
        crossing_occurrences(abab_ins, "cc")
    with pytest.raises(CrossingError):
        classify_type(abab_ins, "a" if not crossing_occurrences(abab_ins, "a") else "zz")
    assert analyze(apply_edit("aaab", next(enumerate_edits("aaab", "a", ("del",)))), "b") is None


def _contexts(t):
    return [apply_edit(t, op) for op in enumerate_edits(t, "abc")]


texts = st.text(alphabet="ab", min_size=1, max_size=9)


@given(texts)
def test_decomposition_rebuilds_x(t):
    for ctx in _contexts(t):
        for x in oracle.maximal_substrings(ctx.edited).repeats - {""}:
            for occ in crossing_occurrences(ctx, x):
                d = decompose(ctx, occ)
                assert x.startswith(d.p) and x.endswith(d.s)
                if occ.contact == CONTAINS and ctx.kind == "del":
                    assert d.p + d.s == x
                elif occ.contact == CONTAINS:
                    assert d.p[:-1] + d.s == x
                if ctx.kind == "del" or occ.contact != CONTAINS:
                    # the parts avoid the edited character, so they occur in T
                    assert oracle.is_substring(ctx.original, d.p)
                    assert oracle.is_substring(ctx.original, d.s)


@given(texts)
def test_j_occurs_in_original(t):
    for ctx in _contexts(t):
        for x in oracle.maximal_substrings(ctx.edited).repeats - {""}:
            occs = crossing_occurrences(ctx, x)
            if len(occs) >= 2:
                assert oracle.is_substring(ctx.original, compute_j(ctx, x))


@given(texts)
def test_periodicity_remark(t):
    # beyond x_L every crossing occurrence has one preceding character, beyond x_R one following
    for ctx in _contexts(t):
        t2 = ctx.edited
        for x in oracle.maximal_substrings(t2).repeats - {""}:
            occs = crossing_occurrences(ctx, x)
            if len(occs) < 3:
                continue
            before = {t2[o.start - 2] if o.start > 1 else None for o in occs[1:]}
            after = {t2[o.end] if o.end < len(t2) else None for o in occs[:-1]}
            assert len(before) == 1 and len(after) == 1


def test_periodicity_remark_exhaustive():
    seen = 0
    for n in range(1, 8):
        for tup in itertools.product("ab", repeat=n):
            for ctx in _contexts("".join(tup)):
                t2 = ctx.edited
                for x in oracle.maximal_substrings(t2).repeats - {""}:
                    occs = crossing_occurrences(ctx, x)
                    if len(occs) < 3:
                        continue
                    seen += 1
                    assert len({t2[o.start - 2] if o.start > 1 else None for o in occs[1:]}) == 1
                    assert len({t2[o.end] if o.end < len(t2) else None for o in occs[:-1]}) == 1
    assert seen > 100
