"""
Command line front end: ``cylknot <command> [flags]``.

Curve commands take ``--s --n --m [--phi p/q]`` (a generic phase is chosen
when --phi is omitted); braid commands take ``--word "s1 s2^-1 ..."``.
Module errors exit with status 1 and a JSON error object on stdout; bad
input exits with status 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .braid import canonicalize, enumerate_candidates, extract_braid, format_braid, parse_braid, realize_sweep, theorem_bound
from .conditions import check_necessary
from .errors import BraidParseError, CylinderKnotError
from .geometry import CurveParams
from .invariants import JONES_CAP, invariant_set
from .knot_table import identify, load_table
from .render import render_svg
from .rosette import factor_block_identity_check, verify_rosette
from .serialize import diagram_to_json
from .braid import diagram


class _UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _params(args) -> CurveParams:
    if args.s is None or args.n is None or args.m is None:
        raise _UsageError("--s, --n and --m are required")
    if args.phi is None:
        return CurveParams.generic(args.s, args.n, args.m)
    return CurveParams(args.s, args.n, args.m, args.phi)


def _word(args):
    if args.word is not None:
        return parse_braid(args.word, args.strands)
    return extract_braid(_params(args))


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2) + "\n")


# --- commands ------------------------------------------------------------


def cmd_curve(args) -> None:
    _json(args, diagram_to_json(diagram(_params(args))))


def cmd_braid(args) -> None:
    word = _word(args)
    if args.canonical:
        word = canonicalize(word)
    _emit(args, format_braid(word) + "\n")


def cmd_invariants(args) -> None:
    _json(args, invariant_set(_word(args), args.cap).to_json())


def cmd_check(args) -> None:
    _json(args, check_necessary(_params(args), args.cap).to_json())


def cmd_enumerate(args) -> None:
    if args.s is None or args.n is None:
        raise _UsageError("--s and --n are required")
    cands = enumerate_candidates(args.s, args.n)
    bound = theorem_bound(args.s, args.n)
    out = {
        "s": args.s,
        "n": args.n,
        "count": len(cands),
        "bound": str(bound),
        "within_bound": len(cands) <= bound,
        "braids": [format_braid(w) for w in cands],
    }
    if args.m_max:
        known = set(cands)
        realized = realize_sweep(args.s, args.n, args.m_max)
        out["m_max"] = args.m_max
        out["realized_outside"] = [m for m, w in realized.items() if w not in known]
    _json(args, out)


def cmd_rosette(args) -> None:
    if args.s is None:
        raise _UsageError("--s is required")
    if args.factor_identity:
        _json(args, factor_block_identity_check(args.s))
        return
    if args.k is None:
        raise _UsageError("--k is required")
    _json(args, verify_rosette(args.s, args.k, args.cap))


def cmd_identify(args) -> None:
    word = _word(args)
    inv = invariant_set(word, args.cap)
    rows = load_table(args.table)
    cands = identify(inv, rows)
    _json(args, {"invariants": inv.to_json(), "candidates": cands, "names": [c["name"] for c in cands]})


def cmd_render(args) -> None:
    _emit(args, render_svg(_params(args)))


COMMANDS = {
    "curve": (cmd_curve, "diagram JSON of Z(s,n,m,phi)"),
    "braid": (cmd_braid, "closed braid word"),
    "invariants": (cmd_invariants, "Alexander, det, signature, Arf, Jones"),
    "check": (cmd_check, "necessary conditions on the factor knot"),
    "enumerate": (cmd_enumerate, "candidate cylinder braids against the bound"),
    "rosette": (cmd_rosette, "rosette realisation check"),
    "identify": (cmd_identify, "look invariants up in a knot table"),
    "render": (cmd_render, "SVG of the projected diagram"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cylknot", description="Billiard knots in a cylinder.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--s", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--phi", type=_fraction)
        p.add_argument("--word")
        p.add_argument("--strands", type=int, help="strand count for --word (default: highest generator + 1)")
        p.add_argument("--table", help="knot table CSV (default: the bundled table)")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--m-max", dest="m_max", type=int)
        p.add_argument("--cap", type=int, default=JONES_CAP, help="longest word for which Jones is computed")
        if name == "rosette":
            p.add_argument("--k", type=int)
            p.add_argument("--factor-identity", action="store_true")
        if name == "braid":
            p.add_argument("--canonical", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        func(args)
    except (_UsageError, BraidParseError) as exc:
        parser.print_usage(sys.stderr)
        print(f"cylknot: error: {exc}", file=sys.stderr)
        return 2
    except CylinderKnotError as exc:
        print(json.dumps(exc.to_json()))
        return 1
    except OSError as exc:
        print(json.dumps({"error": "io", "message": str(exc)}))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
