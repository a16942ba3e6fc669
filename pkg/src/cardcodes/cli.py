"""Command-line front end.

Results go to stdout as ``key=value`` lines (witnesses as ``KIND key=value ...``);
explanations and errors go to stderr.

Exit codes: 0 success / SAT / every check passed, 1 a check failed / UNSAT /
the announcement cannot be decoded, 2 bad usage or input, 3 search timeout.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from . import protocols, verify
from .coloring import Coloring, read_coloring
from .decode import decode_full, decode_min, learned_card
from .deck import Hand, Signature
from .errors import (AmbiguousAnnouncementError, CardCodesError, InconsistentAnnouncementError,
                     NotMinimallyInformativeError)
from .fixtures import FIXTURE_NAMES, builtin_fixture
from .johnson import GraphSpec, graph_stats
from .search import DEFAULT_TIMEOUT, Constraints, find_coloring

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3

CHECK_NAMES = ("informative", "min", "safe", "weaksafe", "ca23")


def _emit(*lines: str) -> None:
    for line in lines:
        print(line)


def _load(spec: str, sig_text: Optional[str]) -> tuple[Coloring, Signature]:
    """A coloring from a file or a built-in fixture name, and the signature to judge it by."""
    sig = Signature.parse(sig_text) if sig_text else None
    name = spec[len("fixture:"):] if spec.startswith("fixture:") else spec
    if spec.startswith("fixture:") or (name in FIXTURE_NAMES and not Path(spec).exists()):
        col, own = builtin_fixture(name)
        return col, sig or own
    if sig is None:
        raise CardCodesError("--sig is required for colorings read from a file")
    return read_coloring(spec), sig


def _save(col: Coloring, out: Optional[str]) -> None:
    if out is None:
        return
    if out == "-":
        sys.stdout.write(col.to_text())
    else:
        Path(out).write_text(col.to_text())
        print(f"file={out}")


def _summary(col: Coloring) -> list[str]:
    return [f"n={col.n}", f"a={col.a}", f"message_count={col.message_count}",
            "class_sizes=" + ",".join(map(str, sorted(col.class_sizes())))]


def cmd_gen(args) -> int:
    proto = args.protocol
    if proto.startswith("fixture:") or proto == "fixture":
        name = proto.partition(":")[2] or args.name
        if not name:
            raise CardCodesError("name the fixture as fixture:<name>")
        col, sig = builtin_fixture(name)
    else:
        if not args.sig:
            raise CardCodesError(f"--sig is required for protocol {proto}")
        sig = Signature.parse(args.sig)
        if proto == "modn":
            col = protocols.modn_coloring(sig)
        elif proto == "mod2":
            col = protocols.parity_coloring(sig)
        elif proto == "gf":
            d = args.d if args.d is not None else sig.d
            weights = protocols.FieldWeights.default(sig.n, args.q)
            col = protocols.gf_coloring(sig, d, weights)
        else:
            raise CardCodesError(f"unknown protocol {proto!r}")
    _emit(f"signature={sig}", *_summary(col))
    _save(col, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    col, sig = _load(args.coloring, args.sig)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECK_NAMES]
    if unknown:
        raise CardCodesError(f"unknown checks {unknown}; choose from {', '.join(CHECK_NAMES)}")
    _emit(f"signature={sig}", f"message_count={col.message_count}")
    every = args.all_witnesses
    ok = True
    for name in checks:
        if name == "informative":
            rep = verify.check_informative(col, sig, all_witnesses=every)
        elif name == "min":
            rep = verify.check_min_informative(col, sig)
        elif name == "safe":
            rep = verify.check_safe(col, sig, all_witnesses=every)
        elif name == "weaksafe":
            rep = verify.check_safe(col, sig, all_witnesses=every, weak=True)
        else:
            rep = verify.check_ca2_ca3(col, sig, all_witnesses=every)
        ok &= rep.verdict
        print(f"check={name} verdict={'pass' if rep.verdict else 'fail'} checked={rep.checked_count}")
        _emit(*(w.line() for w in rep.witnesses))
    return EXIT_OK if ok else EXIT_FALSE


def cmd_decode(args) -> int:
    col, sig = _load(args.coloring, args.sig)
    hand = Hand.parse(args.hand, sig.n)
    try:
        if args.mode == "full":
            print(f"hand={decode_full(hand, args.msg, col, sig)}")
        elif args.mode == "min":
            print(f"set={decode_min(hand, args.msg, col, sig)}")
        else:
            print(f"card={learned_card(hand, args.msg, col, sig)}")
    except InconsistentAnnouncementError as exc:
        return _fail("inconsistent-announcement", exc)
    except AmbiguousAnnouncementError as exc:
        return _fail("ambiguous-announcement", exc)
    except NotMinimallyInformativeError as exc:
        return _fail("not-minimally-informative", exc)
    return EXIT_OK


def _fail(kind: str, exc: Exception) -> int:
    print(f"error={kind}")
    print(exc, file=sys.stderr)
    return EXIT_FALSE


def _parse_constraints(text: str) -> tuple[str, str]:
    informativeness, safety = "none", "none"
    for part in (p.strip() for p in text.split(",") if p.strip()):
        if part == "proper":
            informativeness = "proper"
        elif part == "min":
            informativeness = "min_informative"
        elif part == "safe":
            safety = "safe"
        elif part == "weaksafe":
            safety = "weak_safe"
        else:
            raise CardCodesError(f"unknown constraint {part!r}; use proper|min and safe|weaksafe")
    return informativeness, safety


def cmd_search(args) -> int:
    sig = Signature.parse(args.sig)
    informativeness, safety = _parse_constraints(args.constraints)
    profile = tuple(int(x) for x in args.profile.split(",")) if args.profile else None
    cons = Constraints(informativeness, safety, k=args.k, size_profile=profile,
                       timeout=args.timeout if args.timeout and args.timeout > 0 else None,
                       symmetry_breaking=not args.no_symmetry, double_cover=args.double_cover)
    res = find_coloring(sig, cons, jobs=args.jobs)
    _emit(f"signature={sig}", f"constraints={cons.describe().replace(' ', ';')}", *res.lines())
    if res.coloring is not None:
        _save(res.coloring, args.output)
    return {"SAT": EXIT_OK, "UNSAT": EXIT_FALSE, "TIMEOUT": EXIT_TIMEOUT}[res.outcome]


def cmd_dual(args) -> int:
    col, sig = _load(args.coloring, args.sig)
    dual, new_sig = protocols.dual_protocol(col, sig)
    _emit(f"signature={new_sig}", *_summary(dual))
    _save(dual.normalized(), args.output)
    return EXIT_OK


def cmd_reduce(args) -> int:
    col, sig = _load(args.coloring, args.sig)
    red = protocols.reduce_protocol(col, sig)
    _emit(f"signature={sig}", f"modulus={red.metadata['reduced_modulus']}", *_summary(red))
    _save(red, args.output)
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.sig:
        sig = Signature.parse(args.sig)
        spec = GraphSpec(sig.n, sig.a, sig.d)
    elif args.n is not None and args.m is not None:
        spec = GraphSpec(args.n, args.m, args.d)
    else:
        raise CardCodesError("give --sig, or --n and --m")
    _emit(f"graph={spec}", *graph_stats(spec).lines())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for search")
    common.add_argument("--timeout", type=float, default=argparse.SUPPRESS,
                        help=f"search time limit in seconds, 0 for none (default {DEFAULT_TIMEOUT:g})")
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="cardcodes", parents=[common],
                                     description="Card-deal announcement protocols as Johnson graph colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def coloring_args(p, sig_required=False):
        p.add_argument("--coloring", required=True, help="coloring file, or fixture:<name>")
        p.add_argument("--sig", required=sig_required, help="signature a,b,c,r")
        p.add_argument("-o", "--output", help="write the resulting coloring here ('-' for stdout)")

    p = sub.add_parser("gen", parents=[common], help="tabulate a protocol")
    p.add_argument("--protocol", required=True, help="modn | mod2 | gf | fixture:<name>")
    p.add_argument("--sig")
    p.add_argument("--d", type=int, help="number of symmetric functions for gf (default c+r)")
    p.add_argument("--q", type=int, help="prime field size for gf (default least prime >= n)")
    p.add_argument("--name", help=argparse.SUPPRESS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="check protocol properties")
    p.add_argument("--coloring", required=True)
    p.add_argument("--sig")
    p.add_argument("--checks", default="informative,safe", help="comma list of " + ",".join(CHECK_NAMES))
    p.add_argument("--all-witnesses", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", parents=[common], help="what B learns from a message")
    p.add_argument("--coloring", required=True)
    p.add_argument("--sig")
    p.add_argument("--hand", required=True, help="B's hand, e.g. 4,5,6")
    p.add_argument("--msg", type=int, required=True)
    p.add_argument("--mode", choices=("full", "min", "card"), default="full")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("search", parents=[common], help="search for a coloring")
    p.add_argument("--sig", required=True)
    p.add_argument("-k", type=int, required=True, help="maximum number of messages")
    p.add_argument("--constraints", default="proper", help="proper|min, optionally with safe|weaksafe")
    p.add_argument("--profile", help="class sizes, e.g. 5,6,6,6,6,6")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--double-cover", action="store_true", help="extra pruning for c >= 1, a >= 2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dual", parents=[common], help="complement transform (c+r = 1)")
    coloring_args(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("reduce", parents=[common], help="merge messages into a minimally informative protocol")
    coloring_args(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("stats", parents=[common], help="Johnson graph statistics")
    p.add_argument("--sig", help="use B's graph for this signature")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.jobs = getattr(args, "jobs", 1)
    args.timeout = getattr(args, "timeout", DEFAULT_TIMEOUT)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (CardCodesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
