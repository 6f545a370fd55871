"""Command-line driver.

Exit codes: 0 success, 1 a claim or lemma check failed, 2 usage error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from orbitbound.cache import WeightCache
from orbitbound.enumeration import NotApplicable, enumerate_candidates
from orbitbound.involutions import UnsupportedRepresentation, involution_representatives, screen_representation, symmetric_quotient_dim
from orbitbound.irrep import DEFAULT_BUDGET, BudgetExceeded, HighestWeight, weight_system
from orbitbound.report import (
    FORMATS,
    Engine,
    claims_document,
    envelope,
    load_golden,
    render,
    render_value,
    verify_paper,
)
from orbitbound.rootdata import InvalidTypeError, root_system
from orbitbound.specialchecks import NotSupported, check_lemma_g2, scan_eq_la

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET,
                        help="largest weight-system dimension to compute (default %(default)s)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the weight cache")
    common.add_argument("--cache-dir", default=None, help="cache directory (default: $ORBITBOUND_CACHE)")

    p = argparse.ArgumentParser(prog="orbitbound", description="Exact Lie-theory checks on irreducible representations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="representations under the dimension bound")
    s.add_argument("type")
    s = sub.add_parser("screen", parents=[common], help="nice-involution screen of one representation")
    s.add_argument("type")
    s.add_argument("hw", help="comma-separated highest weight, e.g. 0,0,2")
    s = sub.add_parser("involutions", parents=[common], help="vertex involutions and center twists")
    s.add_argument("type")
    s = sub.add_parser("weights", parents=[common], help="full weight system")
    s.add_argument("type")
    s.add_argument("hw")
    s = sub.add_parser("scan-la", parents=[common], help="solve the fundamental-weight equation")
    s.add_argument("--max-rank", type=_positive_int, default=8)
    s.add_argument("--scale", type=_positive_fraction, default=Fraction(1))
    sub.add_parser("lemma-g2", parents=[common], help="circle-count check for G2 on S^2_0 R^7")
    s = sub.add_parser("verify-paper", parents=[common], help="recompute every golden claim")
    s.add_argument("--golden", default=None, help="golden claims file (default: the bundled one)")
    return p


def _cache(args):
    return None if args.no_cache else WeightCache(args.cache_dir)


def _hw(args) -> HighestWeight:
    try:
        return HighestWeight.parse(args.type, args.hw)
    except (InvalidTypeError, ValueError) as exc:
        raise UsageError(str(exc))


def _type(text: str):
    try:
        return root_system(text)
    except (InvalidTypeError, ValueError) as exc:
        raise UsageError(str(exc))


def cmd_enumerate(args) -> tuple[dict, int]:
    rs = _type(args.type)
    return envelope("enumerate", enumerate_candidates(rs.type).to_json()), EXIT_OK


def cmd_screen(args) -> tuple[dict, int]:
    hw = _hw(args)
    rep = screen_representation(hw, budget=args.budget, cache=_cache(args))
    return envelope("screen", rep.to_json()), EXIT_OK


def cmd_involutions(args) -> tuple[dict, int]:
    rs = _type(args.type)
    rows = []
    for inv in involution_representatives(rs, twists=True):
        rows.append({
            "involution": inv.label, "vertex": inv.vertex, "mark": inv.mark, "twist": inv.twist,
            "x": render_value(inv.x), "corootCoords": render_value(inv.coroot_coords),
            "dimSymmetricQuotient": symmetric_quotient_dim(rs, inv),
        })
    return envelope("involutions", {"type": str(rs.type), "involutions": rows}), EXIT_OK


def cmd_weights(args) -> tuple[dict, int]:
    hw = _hw(args)
    ws = weight_system(hw, budget=args.budget, cache=_cache(args))
    return envelope("weights", ws.to_json()), EXIT_OK


def cmd_scan_la(args) -> tuple[dict, int]:
    if args.max_rank < 2:
        raise UsageError("--max-rank must be at least 2")
    sols = scan_eq_la(args.max_rank, args.scale)
    doc = envelope("scan-la", {"maxRank": args.max_rank, "scale": str(args.scale),
                               "solutions": [s.to_json() for s in sols]})
    return doc, EXIT_OK


def cmd_lemma_g2(args) -> tuple[dict, int]:
    v = check_lemma_g2()
    return envelope("lemma-g2", {"lemmas": [v.to_json()]}), EXIT_OK if v.passed else EXIT_MISMATCH


def cmd_verify_paper(args) -> tuple[dict, int]:
    try:
        golden = load_golden(args.golden)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read golden file: {exc}")
    claims = verify_paper(golden, Engine(args.budget, _cache(args)))
    doc = claims_document(claims)
    return doc, EXIT_MISMATCH if doc["summary"]["mismatch"] else EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "screen": cmd_screen,
    "involutions": cmd_involutions,
    "weights": cmd_weights,
    "scan-la": cmd_scan_la,
    "lemma-g2": cmd_lemma_g2,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        doc, code = COMMANDS[args.command](args)
        out = render(doc, args.format)
    except UsageError as exc:
        print(f"orbitbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotApplicable, NotSupported, UnsupportedRepresentation) as exc:
        print(f"orbitbound: error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"orbitbound: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"orbitbound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
