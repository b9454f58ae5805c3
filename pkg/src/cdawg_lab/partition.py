"""Partition of the maximal repeats of an edited text and the lemma verifier.

Every maximal repeat ``x`` of ``T'`` (the edited text) other than ``T'``
itself falls into exactly one class:

``N1``     new (not maximal in ``T``), right-maximal in ``T``
``N2``     new, left-maximal in ``T``
``Nv``     new, neither, of type V, and every right-extension of ``x`` in
           ``T'`` comes from a crossing occurrence
``NnotV``  new, neither, not in ``Nv``
``Qgt``    maximal in both texts and out-degree grew
``Qle``    maximal in both texts and out-degree did not grow

Three correspondences bound the out-degrees of these classes by out-degrees
in ``CDAWG(T)``:

* ``u`` maps ``N1 | NnotV`` into ``M(T)`` through ``lrep_T`` of a suffix part,
* ``h``/``i`` map ``N2 | Qgt`` into ``M(T)`` through ``rrep_T`` of prefix parts,
* ``k`` maps ``Nv`` into ``M(T)`` through ``lrep_T(rrep_T(J_x))``.

:func:`verify_lemma_suite` recomputes all of it from brute-force predicates
and reports each property that fails together with the offending string.

The empty string is always in ``Q``. Crossing occurrences are only defined
for non-empty strings, so ``ε`` is kept out of the correspondences; its
out-degree can grow by at most one (a character new to the text) and that is
checked on its own.
"""

from dataclasses import dataclass, field

from . import oracle
from .crossing import analyze

__all__ = [
    "N1", "N2", "NV", "NNOTV", "QGT", "QLE", "CLASSES",
    "Entry",
    "PartitionReport",
    "CorrespondenceMaps",
    "Violation",
    "LemmaReport",
    "LEMMAS",
    "partition_repeats",
    "build_maps",
    "degree_sums",
    "verify_lemma_suite",
]

N1, N2, NV, NNOTV, QGT, QLE = "N1", "N2", "Nv", "NnotV", "Qgt", "Qle"
CLASSES = (N1, N2, NV, NNOTV, QGT, QLE)

# Domains of the three correspondences.
GROUP_U = (N1, NNOTV)
GROUP_HI = (N2, QGT)

L, R = "L", "R"


@dataclass(frozen=True)
class Entry:
    x: str
    cls: str
    crossing: object   # crossing.Crossing, None for ε
    d_new: int         # out-degree in T'
    d_old: int = None  # out-degree in T, only when x is maximal in T

    @property
    def type(self):
        return None if self.crossing is None else self.crossing.tag.kind


def _order(x):
    return (-len(x), x)


@dataclass
class PartitionReport:
    ctx: object
    entries: dict  # x -> Entry, longest first
    e_old: int
    e_new: int

    def members(self, *classes):
        return [e for e in self.entries.values() if e.cls in classes]

    def classes(self):
        return {x: e.cls for x, e in self.entries.items()}


def partition_repeats(ctx):
    t, t2 = ctx.original, ctx.edited
    old_max = oracle.maximal_substrings(t)
    new_max = oracle.maximal_substrings(t2)
    entries = {}
    for x in sorted(new_max.repeats, key=_order):
        cr = analyze(ctx, x) if x else None
        ext = oracle.right_extensions(t2, x)
        if x in old_max:
            d_old = len(oracle.right_extensions(t, x))
            cls = QGT if len(ext) > d_old else QLE
            entries[x] = Entry(x, cls, cr, len(ext), d_old)
            continue
        in_t = oracle.is_substring(t, x)
        if in_t and oracle.is_right_maximal(t, x):
            cls = N1
        elif in_t and oracle.is_left_maximal(t, x):
            cls = N2
        elif cr is not None and cr.tag.kind == "V" and ext <= cr.after_chars(t2):
            cls = NV
        else:
            cls = NNOTV
        entries[x] = Entry(x, cls, cr, len(ext))
    return PartitionReport(ctx, entries, oracle.cdawg_size_oracle(t), oracle.cdawg_size_oracle(t2))


@dataclass
class CorrespondenceMaps:
    u: dict = field(default_factory=dict)       # x -> U(x)
    u_side: dict = field(default_factory=dict)  # x -> "L" | "R"
    h: dict = field(default_factory=dict)       # x -> H(x)
    i_map: dict = field(default_factory=dict)   # x -> I(x)
    j: dict = field(default_factory=dict)       # x -> J_x
    k: dict = field(default_factory=dict)       # x -> K(x)
    log: list = field(default_factory=list)


def _suffix_parts(e):
    return (e.crossing.left.s, e.crossing.right.s)


def _prefix_parts(e):
    return (e.crossing.left.p, e.crossing.right.p)


def _claimed_by_longer(part, x, group, parts):
    for y in group:
        if len(y.x) > len(x) and part in parts(y):
            return y.x
    return None


def build_maps(ctx, report, fault=None):
    """Associate every mapped repeat with parts of its crossing occurrences.

    ``fault`` names one string whose association ignores the conflict rules
    (always ``S_{x_L}`` for the ``u`` group, both prefix parts for the
    ``h``/``i`` group). It exists to exercise the verifier's negative path.
    """
    t = ctx.original
    maps = CorrespondenceMaps()

    group = [e for e in report.members(*GROUP_U) if e.crossing is not None]
    for e in group:
        x, kind = e.x, e.type
        s_l, s_r = _suffix_parts(e)
        side, why = L, f"type {kind}"
        if kind in ("IV", "V") and x != fault:
            y = _claimed_by_longer(s_l, x, group, _suffix_parts)
            if y is not None:
                side, why = R, f"S_L={s_l!r} shared with longer {y!r}"
        s = s_l if side == L else s_r
        maps.u_side[x] = side
        maps.log.append(f"{x!r} -> S_{side}={s!r} ({why})")
        if oracle.is_substring(t, s):
            maps.u[x] = oracle.lrep(t, s)

    group = [e for e in report.members(*GROUP_HI) if e.crossing is not None]
    for e in group:
        x, kind = e.x, e.type
        p_l, p_r = _prefix_parts(e)
        if kind == "I":
            sides, why = (L,), "single crossing occurrence"
        elif kind in ("II", "IV") or x == fault:
            sides, why = (L, R), f"type {kind}"
        else:
            y = _claimed_by_longer(p_r, x, group, _prefix_parts)
            z = _claimed_by_longer(p_l, x, group, _prefix_parts)
            if y is not None:
                sides, why = (L,), f"P_R={p_r!r} shared with longer {y!r}"
            elif z is not None:
                sides, why = (R,), f"P_L={p_l!r} shared with longer {z!r}"
            else:
                sides, why = (L, R), "no conflict"
        maps.log.append(f"{x!r} -> P_{'+'.join(sides)} ({why})")
        if L in sides and oracle.is_substring(t, p_l):
            maps.h[x] = oracle.rrep(t, p_l)
        if R in sides and oracle.is_substring(t, p_r):
            maps.i_map[x] = oracle.rrep(t, p_r)

    for e in report.members(NV):
        x = e.x
        p_r = e.crossing.right.p
        s_l = e.crossing.left.s
        if len(e.crossing.occs) < 2 or len(p_r) + len(s_l) > len(x):
            maps.log.append(f"{x!r}: J undefined")
            continue
        jx = x[len(p_r):len(x) - len(s_l)]
        maps.j[x] = jx
        maps.log.append(f"{x!r} -> J={jx!r}")
        if oracle.is_substring(t, jx):
            maps.k[x] = oracle.lrep(t, oracle.rrep(t, jx))
    return maps


def degree_sums(ctx, report):
    """Out-degree totals in ``T'`` over ``N1|NnotV``, ``N2|Q`` and ``Nv``."""
    def total(*classes):
        return sum(e.d_new for e in report.members(*classes))
    return total(N1, NNOTV), total(N2, QGT, QLE), total(NV)


LEMMAS = (
    "partition", "crossing_exists",
    "exist1", "exist2", "sp123", "sp45", "sp124", "sp35",
    "U_x", "U_xU_y", "H_x_I_x", "H_xH_y", "J_xJ_y", "K_xK_y",
    "K_definition", "K_occurs_twice",
    "dt1_per_x", "hi_per_x", "dt3_per_x", "H_or_I_is_T_once", "epsilon_degree",
    "dt1", "dt2", "dt3", "sums_total", "total_bound",
)


@dataclass(frozen=True)
class Violation:
    lemma: str
    text: str
    op: str
    x: str
    detail: str

    def as_dict(self):
        return {"lemma": self.lemma, "text": self.text, "op": self.op, "x": self.x, "detail": self.detail}


@dataclass
class LemmaReport:
    ctx: object
    report: PartitionReport
    maps: CorrespondenceMaps
    sums: tuple
    checked: dict  # lemma -> number of instances checked
    violations: list

    @property
    def passed(self):
        return not self.violations

    def failed_lemmas(self):
        return sorted({v.lemma for v in self.violations})

    def to_doc(self):
        e = self.report.e_old
        return {
            "text": self.ctx.original,
            "edited": self.ctx.edited,
            "edit": str(self.ctx.op),
            "e_T": e,
            "e_T'": self.report.e_new,
            "classes": [
                {"x": en.x, "class": en.cls, "type": en.type, "d_T": en.d_old, "d_T'": en.d_new,
                 "crossing": [[o.start, o.end, o.contact] for o in en.crossing.occs] if en.crossing else []}
                for en in self.report.entries.values()
            ],
            "maps": {
                "u": dict(self.maps.u),
                "h": dict(self.maps.h),
                "i": dict(self.maps.i_map),
                "j": dict(self.maps.j),
                "k": dict(self.maps.k),
            },
            "sums": {"N1|NnotV": self.sums[0], "N2|Q": self.sums[1], "Nv": self.sums[2]},
            "bounds": {"N1|NnotV": 3 * e + 2, "N2|Q": 3 * e + 2, "Nv": 2 * e, "total": 8 * e + 4},
            "checks": {name: self.checked.get(name, 0) for name in LEMMAS},
            "violations": [v.as_dict() for v in self.violations],
        }


class _Checker:
    def __init__(self, ctx):
        self.ctx = ctx
        self.checked = dict.fromkeys(LEMMAS, 0)
        self.violations = []

    def __call__(self, lemma, ok, x="", detail=""):
        self.checked[lemma] += 1
        if not ok:
            self.violations.append(
                Violation(lemma, self.ctx.original, str(self.ctx.op), x, detail))


def _injective(check, lemma, images):
    """``images`` is a sequence of (x, map name, value)."""
    seen = {}
    for x, name, v in images:
        if v in seen:
            y, other = seen[v]
            check(lemma, False, x, f"{name}({x!r}) = {other}({y!r}) = {v!r}")
        else:
            check(lemma, True, x)
            seen[v] = (x, name)


def verify_lemma_suite(ctx, fault=None):
    """Check every structural lemma and degree bound on one edit.

    Failures become :class:`Violation` entries; nothing is raised.
    """
    t, t2 = ctx.original, ctx.edited
    report = partition_repeats(ctx)
    maps = build_maps(ctx, report, fault=fault)
    check = _Checker(ctx)
    old_max = oracle.maximal_substrings(t)
    e = report.e_old

    def d_t(w):
        return len(oracle.right_extensions(t, w)) if w is not None else 0

    # partition membership
    covered = set(report.entries)
    check("partition", covered == oracle.maximal_substrings(t2).repeats, "",
          "classes do not cover M(T') minus T'")
    for en in report.entries.values():
        x = en.x
        in_t = oracle.is_substring(t, x)
        lm = in_t and oracle.is_left_maximal(t, x)
        rm = in_t and oracle.is_right_maximal(t, x)
        ok = {
            N1: rm and not lm,
            N2: lm and not rm,
            NV: not lm and not rm and en.type == "V",
            NNOTV: not lm and not rm,
            QGT: x in old_max and en.d_new > en.d_old,
            QLE: x in old_max and en.d_new <= en.d_old,
        }[en.cls]
        check("partition", ok, x, f"class {en.cls} properties")
        if x and en.cls in (N1, N2, NV, NNOTV, QGT):
            check("crossing_exists", en.crossing is not None, x, "no crossing occurrence")

    group_u = [en for en in report.members(*GROUP_U) if en.crossing is not None]
    group_hi = [en for en in report.members(*GROUP_HI) if en.crossing is not None]

    for en in report.members(*GROUP_U):
        check("exist1", oracle.is_substring(t, en.x), en.x, "does not occur in T")
    for en in report.members(*GROUP_HI):
        if en.x:
            check("exist2", oracle.is_substring(t, en.x), en.x, "does not occur in T")

    for en in group_u:
        x = en.x
        s_l, s_r = _suffix_parts(en)
        y = _claimed_by_longer(s_l, x, group_u, _suffix_parts)
        if en.type in ("I", "II", "III"):
            check("sp123", y is None, x, f"S_L={s_l!r} shared with longer {y!r}")
        else:
            z = _claimed_by_longer(s_r, x, group_u, _suffix_parts)
            check("sp45", y is None or z is None, x,
                  f"S_L={s_l!r} shared with {y!r} and S_R={s_r!r} with {z!r}")

    for en in group_hi:
        x = en.x
        p_l, p_r = _prefix_parts(en)
        y = _claimed_by_longer(p_l, x, group_hi, _prefix_parts)
        z = _claimed_by_longer(p_r, x, group_hi, _prefix_parts)
        if en.type in ("I", "II", "IV"):
            check("sp124", y is None and z is None, x,
                  f"P_L={p_l!r} claimed by {y!r}, P_R={p_r!r} claimed by {z!r}")
        else:
            check("sp35", y is None or z is None, x,
                  f"P_L={p_l!r} shared with {y!r} and P_R={p_r!r} with {z!r}")

    # u
    for en in group_u:
        x = en.x
        ux = maps.u.get(x)
        check("U_x", ux is not None and ux in old_max, x, f"U={ux!r} not in M(T)")
        if ux is not None:
            check("dt1_per_x", en.d_new <= d_t(ux) + 2, x,
                  f"D_T'={en.d_new} > D_T(U)+2={d_t(ux) + 2}")
    _injective(check, "U_xU_y", [(x, "U", v) for x, v in maps.u.items()])

    # h / i
    images = []
    for en in group_hi:
        if en.x in maps.h:
            images.append((en.x, "H", maps.h[en.x]))
        if en.x in maps.i_map:
            images.append((en.x, "I", maps.i_map[en.x]))
    for x, name, v in images:
        check("H_x_I_x", v in old_max, x, f"{name}={v!r} not in M(T)")
    _injective(check, "H_xH_y", images)
    hits_t = sorted({x for x, _, v in images if v == t}, key=_order)
    check("H_or_I_is_T_once", len(hits_t) <= 1, ",".join(hits_t), "H(x)=T or I(x)=T for several x")
    for en in group_hi:
        x = en.x
        hx, ix = maps.h.get(x), maps.i_map.get(x)
        if hx is None and ix is None:
            check("hi_per_x", False, x, "neither H nor I defined")
            continue
        hit_t = t in (hx, ix)
        budget = d_t(hx) + d_t(ix)
        if en.cls == QGT:
            lhs, rhs = en.d_new - en.d_old, budget + (1 if hit_t else 0)
        else:
            lhs, rhs = en.d_new, 2 * budget + (2 if hit_t else 0)
        check("hi_per_x", lhs <= rhs, x, f"{en.cls}: {lhs} > {rhs}")

    # j / k
    for en in report.members(NV):
        x = en.x
        check("dt3_per_x", en.d_new <= 2, x, f"D_T'={en.d_new}")
        check("J_xJ_y", x in maps.j, x, "J undefined")
    _injective(check, "J_xJ_y", [(x, "J", v) for x, v in maps.j.items()])
    for x, jx in maps.j.items():
        kx = maps.k.get(x)
        if kx is None:
            check("K_definition", False, x, f"J={jx!r} does not occur in T")
            continue
        other = oracle.rrep(t, oracle.lrep(t, jx))
        check("K_definition", kx == other and kx in old_max, x,
              f"lrep(rrep(J))={kx!r}, rrep(lrep(J))={other!r}")
        check("K_occurs_twice", oracle.occurrence_count(t, kx) >= 2 and d_t(kx) >= 1, x,
              f"K={kx!r} occurs {oracle.occurrence_count(t, kx)} times")
    _injective(check, "K_xK_y", [(x, "K", v) for x, v in maps.k.items()])

    # ε
    if "" in report.entries:
        en = report.entries[""]
        check("epsilon_degree", en.d_new - en.d_old <= 1, "", f"D grew {en.d_old}->{en.d_new}")

    sums = degree_sums(ctx, report)
    check("dt1", sums[0] <= 3 * e + 2, "", f"{sums[0]} > {3 * e + 2}")
    check("dt2", sums[1] <= 3 * e + 2, "", f"{sums[1]} > {3 * e + 2}")
    check("dt3", sums[2] <= 2 * e, "", f"{sums[2]} > {2 * e}")
    check("sums_total", sum(sums) == report.e_new, "", f"{sum(sums)} != {report.e_new}")
    check("total_bound", report.e_new <= 8 * e + 4, "", f"{report.e_new} > {8 * e + 4}")

    return LemmaReport(ctx, report, maps, sums, check.checked, check.violations)
