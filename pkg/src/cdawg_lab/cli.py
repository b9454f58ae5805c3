"""Command-line interface.

All positions are 1-based. ``--input`` files are read as raw bytes and each
byte value is one symbol (decoded as Latin-1); ``--text`` accepts printable
strings only.

Exit status: 0 on success, 1 when a check reports a violation, 2 on usage
or input errors.
"""

import argparse
import json
import logging
import sys

from . import __version__, cdawg
from .edits import KINDS, EditError, EditOp, apply_edit
from .oracle import cdawg_size_oracle
from .partition import verify_lemma_suite
from .sensitivity import FAMILIES, FamilySpec, exhaustive_scan, family

log = logging.getLogger("cdawg_lab")


class CliError(Exception):
    pass


def _dump(doc, fh=None):
    fh = fh or sys.stdout
    fh.write(json.dumps(doc, indent=2, ensure_ascii=False))
    fh.write("\n")


def _read_text(args):
    if args.input is not None:
        try:
            with open(args.input, "rb") as fh:
                return fh.read().decode("latin-1")
        except OSError as exc:
            raise CliError(f"cannot read {args.input}: {exc.strerror}") from None
    if not args.text.isprintable():
        raise CliError("--text must be printable; use --input for raw bytes")
    return args.text


def _text_source(p, required=True):
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--text", help="the text itself")
    group.add_argument("--input", metavar="FILE", help="read the text from FILE as raw bytes")


def _kinds(p):
    p.add_argument("--kinds", nargs="+", choices=KINDS, default=list(KINDS),
                   help="edit kinds to enumerate (default: all)")


def _scan_opts(p):
    p.add_argument("--alphabet", required=True, help="symbols of the scanned strings, e.g. ab")
    p.add_argument("--max-len", type=int, required=True, help="longest string length")
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--edit-alphabet", help="symbols that edits may write (default: --alphabet)")
    _kinds(p)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--budget", type=float, default=600.0, help="time budget in seconds (0 = none)")
    p.add_argument("--dedupe", action="store_true",
                   help="skip strings that are renamings of an earlier one")


def cmd_build(args):
    t = _read_text(args)
    g = cdawg.build(t)
    with open(args.out, "wb") as fh:
        fh.write(cdawg.serialize(g))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(cdawg.export_dot(g))
    _dump(cdawg.stats(g).as_dict())
    return 0


def cmd_stats(args):
    t = _read_text(args)
    st = cdawg.stats(cdawg.build(t)).as_dict()
    if args.format == "csv":
        sys.stdout.write(",".join(st) + "\n")
        sys.stdout.write(",".join(str(v) for v in st.values()) + "\n")
    elif args.format == "text":
        for k, v in st.items():
            sys.stdout.write(f"{k}\t{v}\n")
    else:
        _dump(st)
    return 0


def cmd_query(args):
    try:
        with open(args.index, "rb") as fh:
            g = cdawg.deserialize(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.index}: {exc.strerror}") from None
    doc = {"pattern": args.pattern, "count": g.count(args.pattern)}
    if args.locate:
        doc["positions"] = g.locate(args.pattern)
    _dump(doc)
    return 0


def cmd_classify(args):
    t = _read_text(args)
    op = EditOp(args.op, args.pos, args.char)
    ctx = apply_edit(t, op)
    rep = verify_lemma_suite(ctx)
    doc = rep.to_doc()
    _dump(doc)
    return 1 if rep.violations else 0


def _scan(args, verify):
    return exhaustive_scan(
        args.max_len, args.alphabet, kinds=args.kinds, edit_alphabet=args.edit_alphabet,
        verify=verify, jobs=args.jobs, budget=args.budget, min_n=args.min_len, dedupe=args.dedupe,
    )


def cmd_verify(args):
    report = _scan(args, verify=True)
    summary = report.summary()
    summary["lemma_checks"] = report.lemma_checks
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            _dump(summary, fh)
    _dump(summary)
    if report.bound_violations or report.lemma_violations:
        return 1
    return 0 if report.complete else 1


def cmd_scan(args):
    report = _scan(args, verify=args.verify_lemmas)
    with open(args.report, "w", encoding="utf-8", newline="") as fh:
        report.write_csv(fh)
    summary = report.summary()
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            _dump(summary, fh)
    _dump(summary)
    return 1 if report.bound_violations or report.lemma_violations else 0


def cmd_family(args):
    word = family(FamilySpec(args.name, args.k))
    if not args.stats:
        sys.stdout.write(word + "\n")
        return 0
    doc = {"name": args.name, "k": args.k, "word": word}
    doc.update(cdawg.stats(cdawg.build(word)).as_dict())
    if args.check_oracle:
        doc["e_oracle"] = cdawg_size_oracle(word)
    _dump(doc)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="cdawg-lab",
        description="CDAWG index and single-edit sensitivity laboratory (positions are 1-based).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and serialize the CDAWG of a text")
    _text_source(p)
    p.add_argument("--out", required=True, metavar="IDX", help="serialized index output")
    p.add_argument("--dot", metavar="FILE", help="also write a Graphviz DOT rendering")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="size statistics {n, e, nodes, sigma}")
    _text_source(p)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("query", help="count or locate a pattern in a serialized index")
    p.add_argument("--index", required=True, metavar="IDX")
    p.add_argument("--pattern", required=True)
    p.add_argument("--locate", action="store_true", help="also list 1-based start positions")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("classify", help="partition the maximal repeats after one edit")
    _text_source(p)
    p.add_argument("--op", required=True, choices=KINDS)
    p.add_argument("--pos", required=True, type=int, help="1-based edit position")
    p.add_argument("--char", help="inserted or substituted character")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the lemma suite on every edit of every short string")
    _scan_opts(p)
    p.add_argument("--out", metavar="FILE", help="also write the summary document to FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="sensitivity ratios of every edit of every short string")
    _scan_opts(p)
    p.add_argument("--report", required=True, metavar="FILE", help="CSV output, one row per edit")
    p.add_argument("--summary", metavar="FILE", help="also write the summary document to FILE")
    p.add_argument("--verify-lemmas", action="store_true", help="run the lemma suite on every edit")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("family", help="generate a classic word")
    p.add_argument("--name", required=True, choices=sorted(FAMILIES))
    p.add_argument("--k", required=True, type=int, help="index, order or length")
    p.add_argument("--stats", action="store_true", help="emit the word with its CDAWG size")
    p.add_argument("--check-oracle", action="store_true", help="with --stats, also report the brute-force e")
    p.set_defaults(func=cmd_family)
    return parser


def run(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (CliError, EditError, cdawg.IndexFormatError, ValueError) as exc:
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return 2


def main():
    sys.exit(run())
