"""Occurrences of a substring of the edited text that touch or contain the edit.

For insertions and substitutions an occurrence ``[j..k]`` of ``x`` in ``T'``
crosses the edited position ``i`` when ``k = i-1`` (touching from the left),
``j <= i <= k`` (containing) or ``j = i+1`` (touching from the right). For
deletions, where ``i`` is the first position after the gap, the clauses are
``k = i-1``, ``j <= i-1 and i <= k``, and ``j = i``.

Each crossing occurrence is split into a prefix part ``p`` (up to the edit
boundary) and a suffix part ``s`` (from the edit boundary). A touching
occurrence lies entirely on one side, so it is all prefix (touching from the
left) or all suffix (touching from the right). This keeps ``p`` a prefix of
``x`` and ``s`` a suffix of ``x`` for every edit kind.
"""

from dataclasses import dataclass

from .edits import DEL
from .oracle import occurrences

__all__ = [
    "TOUCH_LEFT",
    "CONTAINS",
    "TOUCH_RIGHT",
    "CrossingError",
    "CrossingOcc",
    "PsDecomposition",
    "TypeTag",
    "Crossing",
    "crossing_occurrences",
    "decompose",
    "classify_type",
    "compute_j",
    "analyze",
]

TOUCH_LEFT, CONTAINS, TOUCH_RIGHT = "touch_left", "contains", "touch_right"


class CrossingError(ValueError):
    pass


@dataclass(frozen=True)
class CrossingOcc:
    start: int  # j, 1-based in T'
    end: int    # k, inclusive
    contact: str


@dataclass(frozen=True)
class PsDecomposition:
    p: str
    s: str


@dataclass(frozen=True)
class TypeTag:
    kind: str  # "I" .. "V"
    left_div: bool
    right_div: bool

    def __str__(self):
        return self.kind


def _contact(kind, i, j, k):
    if k == i - 1:
        return TOUCH_LEFT
    if kind == DEL:
        if j <= i - 1 and i <= k:
            return CONTAINS
        if j == i:
            return TOUCH_RIGHT
    else:
        if j <= i <= k:
            return CONTAINS
        if j == i + 1:
            return TOUCH_RIGHT
    return None


def crossing_occurrences(ctx, x):
    """All crossing occurrences of non-empty ``x`` in ``ctx.edited``, sorted by start."""
    if not x:
        raise CrossingError("crossing occurrences are defined for non-empty strings only")
    starts = occurrences(ctx.edited, x)
    if not starts:
        raise CrossingError(f"{x!r} does not occur in {ctx.edited!r}")
    out = []
    for j in starts:
        k = j + len(x) - 1
        contact = _contact(ctx.kind, ctx.i, j, k)
        if contact is not None:
            out.append(CrossingOcc(j, k, contact))
    return out


def decompose(ctx, occ):
    t = ctx.edited
    i = ctx.i
    x = t[occ.start - 1:occ.end]
    if occ.contact == TOUCH_LEFT:
        return PsDecomposition(x, "")
    if occ.contact == TOUCH_RIGHT:
        return PsDecomposition("", x)
    p_stop = i - 1 if ctx.kind == DEL else i
    return PsDecomposition(t[occ.start - 1:p_stop], t[i - 1:occ.end])


def _before(t, occ):
    return t[occ.start - 2] if occ.start > 1 else None


def _after(t, occ):
    return t[occ.end] if occ.end < len(t) else None


def _tag(t, occs):
    xl, xr = occs[0], occs[-1]
    left_div = xl.start == 1 or _before(t, xl) != _before(t, xr)
    right_div = xr.end == len(t) or _after(t, xl) != _after(t, xr)
    if len(occs) == 1:
        kind = "I"
    else:
        kind = {(False, False): "II", (False, True): "III",
                (True, False): "IV", (True, True): "V"}[left_div, right_div]
    return TypeTag(kind, left_div, right_div)


def classify_type(ctx, x):
    occs = crossing_occurrences(ctx, x)
    if not occs:
        raise CrossingError(f"{x!r} has no crossing occurrence")
    return _tag(ctx.edited, occs)


def compute_j(ctx, x):
    """``x`` with the prefix part of x_R and the suffix part of x_L removed."""
    occs = crossing_occurrences(ctx, x)
    if len(occs) < 2:
        raise CrossingError(f"{x!r} has fewer than two crossing occurrences")
    p_r = decompose(ctx, occs[-1]).p
    s_l = decompose(ctx, occs[0]).s
    if len(p_r) + len(s_l) > len(x):
        raise CrossingError(f"prefix and suffix parts of {x!r} overlap")
    return x[len(p_r):len(x) - len(s_l)]


@dataclass(frozen=True)
class Crossing:
    """Everything the partition needs about one string's crossing occurrences."""

    x: str
    occs: tuple
    tag: TypeTag
    left: PsDecomposition   # decomposition of x_L
    right: PsDecomposition  # decomposition of x_R

    @property
    def single(self):
        return len(self.occs) == 1

    def after_chars(self, t):
        return {_after(t, o) for o in self.occs} - {None}


def analyze(ctx, x):
    """Crossing summary for ``x``, or None when ``x`` has no crossing occurrence."""
    occs = crossing_occurrences(ctx, x)
    if not occs:
        return None
    return Crossing(
        x,
        tuple(occs),
        _tag(ctx.edited, occs),
        decompose(ctx, occs[0]),
        decompose(ctx, occs[-1]),
    )
