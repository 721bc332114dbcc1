"""Command-line front end: ``asdim <command> ...``.

Exit codes: 0 success, 1 input error, 2 internal invariant violation (a failed
lab check counts as one).  Errors go to stderr with an ``error:`` prefix.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import derivation as cite
from .classify import boundary_note, classify
from .corpus import presentation_corpus
from .derivation import Derivation, Rule, emit_certificate, render, replay_bound
from .errors import InputError, InvariantViolation
from .gog import gog_bound, gog_exactness
from .lab.ball import DEFAULT_VERTEX_CAP
from .lab.runner import CHECKS, run_lab
from .magnus import analyze
from .presentation import parse_gog, parse_presentation, parse_raag
from .raag import raag_asdim
from .words import format_word


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(message)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="asdim", description="Asymptotic dimension bounds with checkable certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    one = sub.add_parser("one-relator", help="one-relator presentations")
    one_sub = one.add_subparsers(dest="action", required=True, parser_class=_Parser)
    an = one_sub.add_parser("analyze", help="recursive upper bound with derivation")
    an.add_argument("text", help='presentation, e.g. "<a, b | a b a^-1 b^-1>"')
    an.add_argument("--depth-limit", type=_nonneg)
    an.add_argument("--json", metavar="PATH")
    cl = one_sub.add_parser("classify", help="exact value via Whitehead minimization")
    cl.add_argument("text")
    cl.add_argument("--assume-hyperbolic-nonsplit", action="store_true", help="print the boundary note for asdim 2")
    cl.add_argument("--json", metavar="PATH")

    for name, what in (("raag", "right-angled Artin group graph"), ("gog", "graph of groups")):
        sp = sub.add_parser(name, help=f"{what} given as JSON")
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--inline", metavar="JSON")
        src.add_argument("file", nargs="?")
        sp.add_argument("--json", metavar="PATH")

    lab = sub.add_parser("lab", help="finite Cayley ball experiments")
    lab.add_argument("check", choices=CHECKS)
    lab.add_argument("--group", required=True, help="bs:m:n, z2 or f2")
    lab.add_argument("--radius", type=_nonneg, required=True)
    lab.add_argument("--pad", type=_nonneg, default=0)
    lab.add_argument("--R", dest="R", type=_nonneg)
    lab.add_argument("--r", dest="r", type=_nonneg)
    lab.add_argument("--seed", type=int, default=0)
    lab.add_argument("--sample-cap", type=_nonneg, default=200)
    lab.add_argument("--vertex-cap", type=_nonneg, default=DEFAULT_VERTEX_CAP)
    lab.add_argument("--no-timing", action="store_true", help="write runtime_ms as null for byte-stable reports")
    lab.add_argument("--json", metavar="PATH")

    cor = sub.add_parser("corpus", help="seeded random one-relator presentations")
    cor.add_argument("--seed", type=int, default=0)
    cor.add_argument("--count", type=_nonneg, default=10)
    cor.add_argument("--min-gens", type=_nonneg, default=2)
    cor.add_argument("--max-gens", type=_nonneg, default=4)
    cor.add_argument("--min-length", type=_nonneg, default=4)
    cor.add_argument("--max-length", type=_nonneg, default=14)
    cor.add_argument("--json", metavar="PATH")
    return p


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _read_json_arg(args) -> str:
    if args.inline is not None:
        return args.inline
    try:
        return Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None


def _print_tree(d: Derivation, out) -> None:
    for line in render(d):
        print(line, file=out)


def _one_relator(args, out) -> int:
    P = parse_presentation(args.text)
    if args.action == "analyze":
        bound, d = analyze(P, depth_limit=args.depth_limit)
        replay_bound(d)
        print(f"asdim <= {bound}", file=out)
        _print_tree(d, out)
        _write(args.json, emit_certificate(d))
        return 0
    c = classify(P)
    payload = {
        "label": str(P),
        "class": c.class_tag.value,
        "minimal_relator": format_word(c.minimal_relator),
        "k": c.k,
        "free_rank": c.free_rank,
        "automorphisms": [a.describe(P.alphabet) for a in c.applied],
    }
    note = boundary_note(c, args.assume_hyperbolic_nonsplit)
    if note:
        payload["note"] = note
    d = Derivation(Rule.LEAF, cite.ONE_RELATOR_EXACT, c.exact_asdim, payload)
    print(f"asdim = {c.exact_asdim} ({c.describe()})", file=out)
    _print_tree(d, out)
    if note:
        print(f"note: {note}", file=out)
    _write(args.json, emit_certificate(d))
    return 0


def _raag(args, out) -> int:
    value, d = raag_asdim(parse_raag(_read_json_arg(args)))
    replay_bound(d)
    print(f"asdim = {value}", file=out)
    _print_tree(d, out)
    _write(args.json, emit_certificate(d))
    return 0


def _gog(args, out) -> int:
    g = parse_gog(_read_json_arg(args))
    res = gog_bound(g)
    exact = gog_exactness(g)
    if exact is not None:
        print(f"asdim = {exact} (edge groups below the top vertex group)", file=out)
    else:
        print(f"asdim <= {res.bound}", file=out)
    _print_tree(res.derivation, out)
    _write(args.json, emit_certificate(res.derivation))
    return 0


def _lab(args, out, err) -> int:
    report = run_lab(
        args.group,
        args.check,
        args.radius,
        pad=args.pad,
        R=args.R,
        r=args.r,
        seed=args.seed,
        sample_cap=args.sample_cap,
        vertex_cap=args.vertex_cap,
    )
    status = "pass" if report.passed else "FAIL"
    line = f"{report.check}: {status} (pairs tested {report.pairs_tested}, violations {report.violations}"
    if report.min_certified_distance is not None:
        line += f", min certified distance {report.min_certified_distance}"
    print(line + ")", file=out)
    if "stats" in report.extra:
        s = report.extra["stats"]
        print(
            f"  sets {s['sets']}, ord {s['ord']}, R-multiplicity {s['r_multiplicity']}, "
            f"max diameter {s['max_diameter']}{'' if s['diameter_exact'] else ' (upper bound)'}, "
            f"d_bound {s['d_bound']}, Lebesgue in [{s['lebesgue_lower']}, {s['lebesgue_upper']}]",
            file=out,
        )
    _write(args.json, report.to_json(timing=not args.no_timing))
    if not report.passed:
        print(f"error: {report.check} found {report.violations} violation(s)", file=err)
        return 2
    return 0


def _corpus(args, out) -> int:
    if not (1 <= args.min_gens <= args.max_gens and 1 <= args.min_length <= args.max_length):
        raise InputError("need 1 <= min <= max for generators and lengths")
    corpus = presentation_corpus(args.seed, args.count, (args.min_gens, args.max_gens), (args.min_length, args.max_length))
    texts = [str(P) for P in corpus]
    for t in texts:
        print(t, file=out)
    doc = {"seed": args.seed, "count": args.count, "presentations": texts}
    _write(args.json, json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return 0


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "one-relator":
            return _one_relator(args, out)
        if args.command == "raag":
            return _raag(args, out)
        if args.command == "gog":
            return _gog(args, out)
        if args.command == "lab":
            return _lab(args, out, err)
        return _corpus(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except InvariantViolation as exc:
        print(f"error: invariant violation: {exc}", file=err)
        return 2


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
