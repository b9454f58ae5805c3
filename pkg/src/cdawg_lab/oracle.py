"""Brute-force string combinatorics.

Everything here is computed by exhaustive enumeration of substring
occurrences. It is slow on purpose and serves as the reference that the
CDAWG index and the edit-sensitivity verifier are checked against.

Positions are 1-based throughout: ``t[p..q]`` in the docstrings means the
Python slice ``t[p - 1:q]``.
"""

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "NotASubstring",
    "NotMaximal",
    "MaximalSet",
    "occurrences",
    "is_substring",
    "is_left_maximal",
    "is_right_maximal",
    "maximal_substrings",
    "right_extensions",
    "out_degree",
    "cdawg_size_oracle",
    "lrep",
    "rrep",
]


class NotASubstring(ValueError):
    """Raised when a query string does not occur in the text."""


class NotMaximal(ValueError):
    """Raised when a string is required to be a maximal substring but is not."""


@dataclass(frozen=True)
class _Context:
    # None in ``before``/``after`` marks the text boundary.
    before: frozenset
    after: frozenset
    count: int


@lru_cache(maxsize=8192)
def _profile(t):
    """Map every substring of ``t`` (including the empty one) to its contexts."""
    n = len(t)
    before = {}
    after = {}
    count = {}
    for j in range(n + 1):
        left = t[j - 1] if j > 0 else None
        for k in range(j, n + 1):
            w = t[j:k]
            right = t[k] if k < n else None
            before.setdefault(w, set()).add(left)
            after.setdefault(w, set()).add(right)
            count[w] = count.get(w, 0) + 1
    return {
        w: _Context(frozenset(before[w]), frozenset(after[w]), count[w])
        for w in count
    }


def _context(t, w):
    ctx = _profile(t).get(w)
    if ctx is None:
        raise NotASubstring(f"{w!r} does not occur in {t!r}")
    return ctx


def occurrences(t, w):
    """Ascending 1-based start positions of ``w`` in ``t``.

    The empty string occurs at every position ``1..len(t) + 1``.
    """
    m = len(w)
    return [p + 1 for p in range(len(t) - m + 1) if t[p:p + m] == w]


def is_substring(t, w):
    return w in _profile(t)


def is_left_maximal(t, w):
    """True iff ``w`` is a prefix of ``t`` or is preceded by two distinct characters."""
    ctx = _context(t, w)
    return None in ctx.before or len(ctx.before) >= 2


def is_right_maximal(t, w):
    """True iff ``w`` is a suffix of ``t`` or is followed by two distinct characters."""
    ctx = _context(t, w)
    return None in ctx.after or len(ctx.after) >= 2


def right_extensions(t, w):
    """Characters ``a`` with ``w + a`` a substring of ``t``."""
    return _context(t, w).after - {None}


def left_extensions(t, w):
    return _context(t, w).before - {None}


def occurrence_count(t, w):
    return _context(t, w).count


@dataclass(frozen=True)
class MaximalSet:
    """The maximal substrings of ``text``: both left- and right-maximal."""

    text: str
    entries: frozenset

    def __contains__(self, w):
        return w in self.entries

    def __iter__(self):
        return iter(sorted(self.entries, key=lambda w: (len(w), w)))

    def __len__(self):
        return len(self.entries)

    def is_whole_string(self, w):
        return w == self.text

    @property
    def repeats(self):
        """Maximal repeats, i.e. every entry except the text itself."""
        return self.entries - {self.text}


@lru_cache(maxsize=8192)
def maximal_substrings(t):
    entries = frozenset(
        w
        for w, ctx in _profile(t).items()
        if (None in ctx.before or len(ctx.before) >= 2)
        and (None in ctx.after or len(ctx.after) >= 2)
    )
    return MaximalSet(t, entries)


def out_degree(t, x):
    """Number of out-edges of the CDAWG node for the maximal substring ``x``."""
    if x not in maximal_substrings(t):
        raise NotMaximal(f"{x!r} is not a maximal substring of {t!r}")
    return len(right_extensions(t, x))


def cdawg_size_oracle(t):
    """e(t): total out-degree over all maximal substrings. Zero for the empty text."""
    if not t:
        return 0
    return sum(len(right_extensions(t, x)) for x in maximal_substrings(t).entries)


def lrep(t, w):
    """Shortest left extension ``a + w`` of ``w`` that is left-maximal in ``t``."""
    ctx = _context(t, w)
    while not (None in ctx.before or len(ctx.before) >= 2):
        (c,) = ctx.before
        w = c + w
        ctx = _context(t, w)
    return w


def rrep(t, w):
    """Shortest right extension ``w + b`` of ``w`` that is right-maximal in ``t``."""
    ctx = _context(t, w)
    while not (None in ctx.after or len(ctx.after) >= 2):
        (c,) = ctx.after
        w = w + c
        ctx = _context(t, w)
    return w
