"""Multiplicative sensitivity of the CDAWG size under single-character edits.

Sizes come from the CDAWG index; the optional lemma verification goes
through the brute-force oracle. Scans are parallel over input strings and
always report in enumeration order, whatever the worker count.
"""

import csv
import io
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import cdawg
from .edits import KINDS, apply_edit, enumerate_edits
from .partition import LEMMAS, verify_lemma_suite

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "family",
    "fibonacci",
    "thue_morse",
    "unary_b",
    "size",
    "Row",
    "StringSensitivity",
    "SensitivityReport",
    "ms_for_string",
    "exhaustive_scan",
    "canonical",
]

log = logging.getLogger(__name__)


def fibonacci(k):
    """F_1 = b, F_2 = a, F_k = F_{k-1} F_{k-2}."""
    if k < 1:
        raise ValueError("Fibonacci index must be >= 1")
    if k == 1:
        return "b"
    prev, cur = "b", "a"
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return cur


def thue_morse(k):
    """``k`` iterations of a -> ab, b -> ba starting from ``a``."""
    if k < 1:
        raise ValueError("Thue-Morse order must be >= 1")
    w = "a"
    for _ in range(k):
        w = "".join("ab" if c == "a" else "ba" for c in w)
    return w


def unary_b(n):
    """a^(n-1) b."""
    if n < 1:
        raise ValueError("length must be >= 1")
    return "a" * (n - 1) + "b"


FAMILIES = {"fibonacci": fibonacci, "thue_morse": thue_morse, "unary_b": unary_b}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    k: int


def family(spec):
    try:
        gen = FAMILIES[spec.name]
    except KeyError:
        raise ValueError(f"unknown family {spec.name!r}; choose from {sorted(FAMILIES)}") from None
    return gen(spec.k)


def size(t):
    """e(t), with e(ε) = 0."""
    return cdawg.build(t).edge_count if t else 0


@dataclass(frozen=True)
class Row:
    text: str
    op: str
    kind: str
    e_old: int
    e_new: int

    @property
    def ratio(self):
        return Fraction(self.e_new, self.e_old)

    @property
    def within_bound(self):
        return self.e_new <= 8 * self.e_old + 4

    @property
    def margin(self):
        return Fraction(8) + Fraction(4, self.e_old) - self.ratio


def _rows(t, kinds, alphabet, strict=True):
    e = size(t)
    rows = []
    for op in enumerate_edits(t, alphabet, kinds, strict=strict):
        ctx = apply_edit(t, op)
        rows.append(Row(t, str(op), op.kind, e, size(ctx.edited)))
    return rows


def _argmax(rows):
    best = None
    for r in rows:
        if best is None or r.ratio > best.ratio:
            best = r
    return best


@dataclass
class StringSensitivity:
    text: str
    e: int
    rows: list
    worst: Row
    worst_by_kind: dict  # kind -> Row

    @property
    def ratio(self):
        return self.worst.ratio if self.worst else None


def ms_for_string(t, kinds=KINDS, alphabet=None):
    """Largest e(T')/e(T) over all single edits of ``t`` (first maximum in enumeration order)."""
    if not t:
        raise ValueError("text must be non-empty")
    alphabet = alphabet or sorted(set(t))
    rows = _rows(t, kinds, alphabet)
    by_kind = {}
    for kind in KINDS:
        picked = [r for r in rows if r.kind == kind]
        if picked:
            by_kind[kind] = _argmax(picked)
    return StringSensitivity(t, size(t), rows, _argmax(rows), by_kind)


def canonical(t, letters=None):
    """Relabel characters by order of first occurrence onto ``letters`` (default: sorted alphabet of ``t``)."""
    letters = sorted(set(t)) if letters is None else letters
    mapping = {}
    for c in t:
        if c not in mapping:
            mapping[c] = letters[len(mapping)]
    return "".join(mapping[c] for c in t)


def _strings(alphabet, max_n, min_n, dedupe):
    letters = sorted(set(alphabet))
    for n in range(min_n, max_n + 1):
        for tup in itertools.product(letters, repeat=n):
            t = "".join(tup)
            if dedupe and t != canonical(t, letters):
                continue
            yield t


def _scan_one(args):
    t, kinds, edit_alphabet, verify = args
    rows = _rows(t, kinds, edit_alphabet)
    violations = []
    checked = dict.fromkeys(LEMMAS, 0)
    contexts = 0
    if verify:
        for op in enumerate_edits(t, edit_alphabet, kinds):
            rep = verify_lemma_suite(apply_edit(t, op))
            contexts += 1
            violations.extend(rep.violations)
            for name, c in rep.checked.items():
                checked[name] += c
    return t, rows, violations, checked, contexts


@dataclass
class SensitivityReport:
    alphabet: str
    edit_alphabet: str
    kinds: tuple
    max_n: int
    rows: list = field(default_factory=list)
    strings: int = 0
    complete: bool = True
    verified_contexts: int = 0
    lemma_checks: dict = field(default_factory=lambda: dict.fromkeys(LEMMAS, 0))
    lemma_violations: list = field(default_factory=list)

    @property
    def bound_violations(self):
        return [r for r in self.rows if not r.within_bound]

    def worst(self, kind=None):
        return _argmax(r for r in self.rows if kind is None or r.kind == kind)

    def worst_by_length(self):
        out = {}
        for r in self.rows:
            n = len(r.text)
            if n not in out or r.ratio > out[n].ratio:
                out[n] = r
        return out

    def lemma_failures(self):
        counts = {}
        for v in self.lemma_violations:
            counts[v.lemma] = counts.get(v.lemma, 0) + 1
        return dict(sorted(counts.items()))

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["text", "op", "e_T", "e_T'", "ratio"])
        for r in self.rows:
            w.writerow([r.text, r.op, r.e_old, r.e_new, f"{float(r.ratio):.6f}"])

    def csv_text(self):
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()

    def summary(self):
        def row_doc(r):
            if r is None:
                return None
            return {"text": r.text, "op": r.op, "e_T": r.e_old, "e_T'": r.e_new,
                    "ratio": str(r.ratio), "ratio_float": round(float(r.ratio), 6),
                    "bound_margin": round(float(r.margin), 6)}
        first_lemma = {}
        for v in self.lemma_violations:
            first_lemma.setdefault(v.lemma, v.as_dict())
        return {
            "alphabet": self.alphabet,
            "edit_alphabet": self.edit_alphabet,
            "kinds": list(self.kinds),
            "max_n": self.max_n,
            "complete": self.complete,
            "strings": self.strings,
            "edits": len(self.rows),
            "bound_violations": len(self.bound_violations),
            "worst": row_doc(self.worst()),
            "worst_by_kind": {k: row_doc(self.worst(k)) for k in self.kinds},
            "worst_by_length": {str(n): row_doc(r) for n, r in sorted(self.worst_by_length().items())},
            "min_bound_margin": (round(float(min(r.margin for r in self.rows)), 6) if self.rows else None),
            "verified_contexts": self.verified_contexts,
            "lemma_violation_count": len(self.lemma_violations),
            "lemma_failures": self.lemma_failures(),
            "lemma_first_counterexample": dict(sorted(first_lemma.items())),
        }


def exhaustive_scan(max_n, alphabet, kinds=KINDS, edit_alphabet=None, verify=False,
                    jobs=1, budget=600.0, min_n=1, dedupe=False):
    """Every edit of every string over ``alphabet`` with length ``min_n..max_n``.

    ``edit_alphabet`` supplies inserted/substituted characters (defaults to
    ``alphabet``). With ``verify`` the lemma suite runs on every edit. When
    ``budget`` seconds elapse the report is returned with ``complete=False``.
    """
    edit_alphabet = "".join(sorted(set(edit_alphabet or alphabet)))
    kinds = tuple(k for k in KINDS if k in set(kinds))
    report = SensitivityReport("".join(sorted(set(alphabet))), edit_alphabet, kinds, max_n)
    work = ((t, kinds, edit_alphabet, verify) for t in _strings(alphabet, max_n, max(min_n, 1), dedupe))
    deadline = time.monotonic() + budget if budget else None

    def consume(results):
        for t, rows, violations, checked, contexts in results:
            report.strings += 1
            report.rows.extend(rows)
            report.lemma_violations.extend(violations)
            report.verified_contexts += contexts
            for name, c in checked.items():
                report.lemma_checks[name] += c
            if deadline is not None and time.monotonic() > deadline:
                report.complete = False
                log.warning("scan budget of %ss exhausted after %d strings", budget, report.strings)
                return

    if jobs <= 1:
        consume(map(_scan_one, work))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            consume(pool.map(_scan_one, work, chunksize=16))
            pool.shutdown(cancel_futures=True)
    return report
