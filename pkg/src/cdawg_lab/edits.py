"""Single-character edits and the distance-1 neighbourhood of a string."""

import re
from dataclasses import dataclass

__all__ = [
    "KINDS",
    "EditError",
    "EditOp",
    "EditedContext",
    "apply_edit",
    "enumerate_edits",
    "parse_op",
]

INS, DEL, SUB = "ins", "del", "sub"
KINDS = (INS, DEL, SUB)

_NAMES = {"insertion": INS, "deletion": DEL, "substitution": SUB}


class EditError(ValueError):
    pass


def _kind(kind):
    kind = _NAMES.get(kind, kind)
    if kind not in KINDS:
        raise EditError(f"unknown edit kind {kind!r}")
    return kind


@dataclass(frozen=True)
class EditOp:
    """An edit at 1-based ``position``. ``char`` is None for deletions."""

    kind: str
    position: int
    char: str = None

    def __post_init__(self):
        object.__setattr__(self, "kind", _kind(self.kind))
        if self.kind == DEL:
            if self.char is not None:
                raise EditError("a deletion takes no character")
        elif self.char is None or len(self.char) != 1:
            raise EditError(f"{self.kind} needs exactly one character")

    def __str__(self):
        if self.kind == DEL:
            return f"del@{self.position}"
        return f"{self.kind}@{self.position}={self.char}"


_OP_RE = re.compile(r"^(ins|del|sub)@(\d+)(?:=(.))?$", re.S)


def parse_op(s):
    """Inverse of ``str(EditOp)``: ``"del@13"``, ``"ins@3=c"``, ``"sub@5=b"``."""
    m = _OP_RE.match(s)
    if not m:
        raise EditError(f"cannot parse edit {s!r}")
    return EditOp(m.group(1), int(m.group(2)), m.group(3))


@dataclass(frozen=True)
class EditedContext:
    """``edited`` is ``original`` after ``op``; ``i`` is the edited position in ``edited``.

    For a deletion ``i`` is the position just after the gap, so
    ``edited[1..i-1] == original[1..i-1]`` and ``edited[i..] == original[i+1..]``.
    """

    original: str
    edited: str
    i: int
    op: EditOp

    @property
    def kind(self):
        return self.op.kind


def apply_edit(t, op, strict=False):
    """Apply ``op`` to ``t``. With ``strict`` an identity substitution is rejected."""
    n = len(t)
    p = op.position
    if op.kind == INS:
        if not 1 <= p <= n + 1:
            raise EditError(f"insertion position {p} outside 1..{n + 1}")
        edited = t[:p - 1] + op.char + t[p - 1:]
    else:
        if not 1 <= p <= n:
            raise EditError(f"{op.kind} position {p} outside 1..{n}")
        if op.kind == DEL:
            edited = t[:p - 1] + t[p:]
        else:
            if strict and t[p - 1] == op.char:
                raise EditError(f"identity substitution {op} on {t!r}")
            edited = t[:p - 1] + op.char + t[p:]
    return EditedContext(t, edited, p, op)


def enumerate_edits(t, alphabet, kinds=KINDS, strict=True):
    """Yield every valid edit of ``t`` of the requested kinds, ordered by (kind, position, char)."""
    if not alphabet:
        raise EditError("alphabet must be non-empty")
    chars = sorted(set(alphabet))
    wanted = {_kind(k) for k in kinds}
    n = len(t)
    for kind in KINDS:
        if kind not in wanted:
            continue
        if kind == INS:
            for p in range(1, n + 2):
                for c in chars:
                    yield EditOp(INS, p, c)
        elif kind == DEL:
            for p in range(1, n + 1):
                yield EditOp(DEL, p)
        else:
            for p in range(1, n + 1):
                for c in chars:
                    if strict and c == t[p - 1]:
                        continue
                    yield EditOp(SUB, p, c)
