"""Command line front end.

Every subcommand prints exactly one JSON document on stdout; diagnostics go
to stderr. Exit codes: 0 success, 2 malformed input, 3 precondition or budget
violated, 4 internal invariant broken, 10 a star-bound violation was found.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .core import closure, is_intersecting
from .enumeration import all_complexes, canonical_form, exhaustive_verify
from .errors import (BudgetExceeded, CapacityError, ChvatalError,
                     InternalInvariantBroken, MalformedInput, NotIntersecting,
                     PreconditionViolated, UnknownVertex)
from .jsonio import FAMILY_SCHEMA, family_to_json, loads
from .oracle import DEFAULT_NODE_BUDGET, max_star, verify_chvatal
from .rank3 import sterboul
from .transform import two_star_compress

log = logging.getLogger("chvatal")

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4
EXIT_VIOLATION = 10


def read_family(source: str):
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source) as fh:
                text = fh.read()
        except OSError as exc:
            raise MalformedInput(f"cannot read {source}: {exc}") from exc
    return loads(text)


def cmd_verify(args):
    family = read_family(args.input)
    if not is_intersecting(family):
        raise NotIntersecting("family is not intersecting")
    out = {"family_size": family.size, "rank": family.rank, "intersecting": True}
    if not family.size:
        out.update(holds=True, witness=None, star_size=0, method="empty")
        return out, EXIT_OK
    if family.rank <= 3:
        cert = sterboul(family)
        out.update(holds=True, witness=family.ground.label(cert.witness),
                   star_size=cert.star_size, method="certificate")
        return out, EXIT_OK
    v, s = max_star(closure(family))
    holds = family.size <= s
    out.update(holds=holds, witness=family.ground.label(v), star_size=s, method="max-star")
    return out, EXIT_OK if holds else EXIT_VIOLATION


def cmd_compress(args):
    family = read_family(args.input)
    res = two_star_compress(family, args.a, args.b)
    out = res.to_json()
    out["input_size"] = family.size
    if args.trace:
        out["trace"] = [s.to_json() for s in res.trace]
    return out, EXIT_OK


def cmd_rank3(args):
    family = read_family(args.input)
    cert = sterboul(family)
    out = cert.to_json()
    if args.trace:
        out["final_family"] = family_to_json(cert.final_family)
    return out, EXIT_OK


def cmd_oracle(args):
    family = read_family(args.input)
    verdict = verify_chvatal(closure(family), node_budget=args.node_budget)
    return verdict.to_json(), EXIT_OK if verdict.holds else EXIT_VIOLATION


def cmd_enumerate(args):
    if args.verify:
        report = exhaustive_verify(args.n, canonical=args.canonical, jobs=args.jobs,
                                   huge=args.huge)
        out = report.to_json()
        return out, EXIT_VIOLATION if report.violations else EXIT_OK
    if args.n > 5 and not args.huge:
        raise BudgetExceeded(f"n={args.n} is only run with --huge")
    total, keys = 0, set()
    for cx in all_complexes(args.n):
        total += 1
        if args.canonical:
            keys.add(canonical_form(cx))
    return {"n": args.n, "total": total,
            "canonical": len(keys) if args.canonical else None}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chvatal",
                                description="Star-bound certificates and checks for intersecting families.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--schema", action="store_true", help="print the family JSON schema and exit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command")

    def with_input(sp):
        sp.add_argument("-i", "--input", required=True,
                        help="family JSON: a path, '-' for stdin, or an inline document")
        return sp

    sp = with_input(sub.add_parser("verify", help="check |F| <= max star of the complex F generates"))
    sp.set_defaults(func=cmd_verify)

    sp = with_input(sub.add_parser("compress", help="two-star compression of F inside st(a) | st(b)"))
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_compress)

    sp = with_input(sub.add_parser("rank3", help="certificate for an intersecting family of rank <= 3"))
    sp.add_argument("--trace", action="store_true", help="also print the final family")
    sp.set_defaults(func=cmd_rank3)

    sp = with_input(sub.add_parser("oracle", help="brute-force verdict on the complex F generates"))
    sp.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("enumerate", help="generate (and optionally verify) all complexes on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--canonical", action="store_true")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--huge", action="store_true", help="allow n = 6")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    if args.schema:
        print(json.dumps(FAMILY_SCHEMA, indent=2))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_MALFORMED
    try:
        out, code = args.func(args)
    except (MalformedInput, UnknownVertex, CapacityError) as exc:
        log.error("malformed input: %s", exc)
        return EXIT_MALFORMED
    except (PreconditionViolated, BudgetExceeded) as exc:
        log.error("precondition violated: %s", exc)
        return EXIT_PRECONDITION
    except InternalInvariantBroken as exc:
        log.error("internal invariant broken: %s", exc)
        return EXIT_INTERNAL
    except ChvatalError as exc:
        log.error("%s", exc)
        return EXIT_PRECONDITION
    print(json.dumps(out, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
