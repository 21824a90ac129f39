"""Command-line front end.

Exit codes: 0 success, 1 an identity failed to verify, 2 usage or data error.
Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .enumeration import StratumSpec, count_stratum, enumerate_ncb, guard_overridden
from .errors import NCBError
from .involutions import eta_step, rho_step, theta_step
from .reiner import SubsetPair, decode, encode
from .render import RenderSpec, render_svg
from .serialize import (
    colored_doc,
    dumps,
    pair_doc,
    parse_colored,
    parse_partition,
    partition_doc,
)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncpb", description="Type-B noncrossing partition toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list NC^B(n) or one of its strata")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int)
    e.add_argument("--singleton-free", action="store_true")
    e.add_argument("--matchlike", action="store_true")
    e.add_argument("--json", action="store_true")

    c = sub.add_parser("count", help="|NC^B(n)| and |NC^B(n,k)| for n = 1..N")
    c.add_argument("--n-max", type=int, required=True)

    v = sub.add_parser("verify", help="check identities by exact polynomial equality")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity", choices=harness.IDENTITY_IDS)
    which.add_argument("--all", action="store_true")
    v.add_argument("--n-max", type=int)
    v.add_argument("--json", action="store_true")
    v.add_argument("--unguard", action="store_true")

    r = sub.add_parser("reiner", help="subset-pair bijection")
    rsub = r.add_subparsers(dest="direction", required=True)
    enc = rsub.add_parser("encode")
    enc.add_argument("--n", type=int, required=True)
    enc.add_argument("--left", type=_int_list, required=True)
    enc.add_argument("--right", type=_int_list, required=True)
    dec = rsub.add_parser("decode")
    dec.add_argument("--input", required=True)

    i = sub.add_parser("involution", help="apply rho, theta or eta once")
    i.add_argument("--which", choices=("rho", "theta", "eta"), required=True)
    i.add_argument("--input", required=True)
    i.add_argument("--trace", action="store_true")

    d = sub.add_parser("render", help="draw a partition as SVG")
    d.add_argument("--input", required=True)
    d.add_argument("--style", choices=("linear", "cyclic"), required=True)
    d.add_argument("--out", required=True)
    return ap


def _cmd_enumerate(args, out):
    spec = StratumSpec(k=args.k, singleton_free=args.singleton_free, matchlike=args.matchlike)
    parts = enumerate_ncb(args.n, spec)
    if args.json:
        out.write(json.dumps([partition_doc(p) for p in parts]) + "\n")
    else:
        for p in parts:
            out.write(str(p) + "\n")
    return 0


def _cmd_count(args, out):
    out.write("n\ttotal\tby_k\n")
    for n in range(1, args.n_max + 1):
        by_k = [count_stratum(n, StratumSpec(k=k)) for k in range(n + 1)]
        out.write(f"{n}\t{sum(by_k)}\t{','.join(map(str, by_k))}\n")
    return 0


def _cmd_verify(args, out, registry):
    registry = harness.REGISTRY if registry is None else registry
    unguard = args.unguard or guard_overridden()
    if args.all:
        n_max = args.n_max if args.n_max is not None else max(s.guard for s in registry.values())
        reports = harness.verify_all(n_max, unguard=unguard, registry=registry)
    else:
        spec = registry[args.identity]
        n_max = args.n_max if args.n_max is not None else spec.guard
        reports = [harness.verify(args.identity, n_max, unguard=unguard, registry=registry)]
    if args.json:
        records = [rec for r in reports for rec in r.records()]
        out.write(json.dumps(records, indent=1) + "\n")
    else:
        out.write(harness.format_table(reports) + "\n")
    failed = [r for r in reports if not r.passed]
    for r in failed:
        detail = r.error or f"witness {json.dumps(r.witness)}"
        print(f"verify: {r.id} failed: {detail}", file=sys.stderr)
    return 1 if failed else 0


def _cmd_reiner(args, out):
    if args.direction == "encode":
        p = encode(SubsetPair.of(args.n, args.left, args.right))
        out.write(dumps(partition_doc(p)) + "\n")
    else:
        pair = decode(parse_partition(_read(args.input)))
        out.write(dumps(pair_doc(pair)) + "\n")
    return 0


def _cmd_involution(args, out):
    text = _read(args.input)
    if args.which == "rho":
        step = rho_step(parse_partition(text))
        doc = partition_doc(step.result)
    else:
        fn = theta_step if args.which == "theta" else eta_step
        step = fn(parse_colored(text))
        doc = colored_doc(step.result)
    if args.trace:
        out.write(dumps({"result": doc, "trace": step.as_dict()}) + "\n")
    else:
        out.write(dumps(doc) + "\n")
    return 0


def _cmd_render(args, out):
    p = parse_partition(_read(args.input))
    render_svg(p, RenderSpec(style=args.style, out=args.out))
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def main(argv=None, registry=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "enumerate":
            return _cmd_enumerate(args, out)
        if args.command == "count":
            return _cmd_count(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, registry)
        if args.command == "reiner":
            return _cmd_reiner(args, out)
        if args.command == "involution":
            return _cmd_involution(args, out)
        return _cmd_render(args, out)
    except (NCBError, OSError) as exc:
        print(f"ncpb {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
