"""Command line front end.

Exit status: 0 on success, 1 on Gauss-code parse errors, 2 when a requested
computation's precondition fails (for example the determinant of a knot that
is not checkerboard colorable).
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrows import ascending_polynomial, conway_pairing, conway_set, descending_polynomial
from .catalog import builtin_catalog, find_entry, load_catalog
from .determinant import determinant
from .diagram import (
    index,
    is_mod_p_numberable,
    parse_gauss_code,
    serialize_gauss_code,
    warping_degree,
)
from .enumeration import enumerate_diagrams
from .errors import GaussCodeError, PreconditionError, VknotError
from .verify import CHECKS, SweepConfig, reports_to_json, run_checks


def _build_parser():
    parser = argparse.ArgumentParser(prog="vknot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="invariants of one knot (code or catalog name)")
    inv.add_argument("knot", help="signed Gauss code, or a catalog entry name")
    inv.add_argument("-p", "--modulus", type=int, action="append", default=None,
                     help="modulus for colorability and v2 (repeatable; default 2)")
    inv.add_argument("--degree", type=int, default=None, help="polynomial degree bound")
    inv.add_argument("--catalog", default=None, help="extra catalog file for name lookup")
    inv.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run sweep checks")
    ver.add_argument("checks", nargs="*", help="check names (default: all: %s)" % ", ".join(sorted(CHECKS)))
    ver.add_argument("--max-chords", type=int, default=4)
    ver.add_argument("-p", "--modulus", type=int, action="append", default=None,
                     help="moduli for the modular checks (default 2 3)")
    ver.add_argument("--samples", type=int, default=1000)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--json", action="store_true")

    enu = sub.add_parser("enumerate", help="stream one-circle diagrams with k chords")
    enu.add_argument("chords", type=int)
    enu.add_argument("--canonical", action="store_true",
                     help="deduplicate up to basepoint rotation")
    enu.add_argument("--colorable", type=int, default=None, metavar="P",
                     help="keep only mod-P numberable diagrams")
    enu.add_argument("--limit", type=int, default=None)

    con = sub.add_parser("conway", help="export one-component ascending/descending diagrams")
    con.add_argument("--degree", type=int, required=True, help="generate all degrees up to this bound")
    con.add_argument("--variant", choices=("ascending", "descending"), default=None)
    return parser


def _mod8_class(v2_mod2):
    return "+-1 mod 8" if v2_mod2 == 0 else "+-3 mod 8"


def _cmd_invariants(args):
    entries = builtin_catalog()
    if args.catalog:
        entries = load_catalog(args.catalog) + entries
    entry = find_entry(args.knot, entries)
    code = entry.code if entry else args.knot
    diagram = parse_gauss_code(code)
    moduli = args.modulus or [2]
    degree = args.degree if args.degree is not None else diagram.num_chords

    out = {
        "code": serialize_gauss_code(diagram),
        "name": entry.name if entry else None,
        "circles": diagram.num_circles,
        "chords": diagram.num_chords,
    }
    refusals = []
    is_knot = diagram.num_circles == 1
    if is_knot:
        out["indices"] = {str(c): index(diagram, c) for c in diagram.chord_ids()}
        out["warping_degree"] = warping_degree(diagram)
        out["ascending"] = list(ascending_polynomial(diagram, degree).coeffs)
        out["descending"] = list(descending_polynomial(diagram, degree).coeffs)
        out["c2"] = conway_pairing(diagram, 2, "ascending")
    out["colorable"] = {str(p): is_mod_p_numberable(diagram, p) for p in moduli}
    if is_knot:
        out["v2"] = {
            str(p): (out["c2"] % p if p else out["c2"]) if out["colorable"][str(p)] else None
            for p in moduli
        }
    try:
        out["determinant"] = determinant(diagram)
    except PreconditionError as exc:
        out["determinant"] = None
        refusals.append("determinant refused: %s" % exc)
    if is_knot and out["determinant"] is not None:
        v2_mod2 = out["c2"] % 2
        out["mod8_class"] = _mod8_class(v2_mod2)
        out["mod8_consistent"] = out["determinant"] % 8 in ({1, 7} if v2_mod2 == 0 else {3, 5})
    out["refusals"] = refusals

    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print("code: %s" % out["code"])
        if entry:
            print("name: %s" % entry.name)
        print("circles: %d  chords: %d" % (out["circles"], out["chords"]))
        if is_knot:
            print("indices: %s" % " ".join("%s:%d" % kv for kv in sorted(out["indices"].items())))
            print("warping degree: %d" % out["warping_degree"])
        for p in moduli:
            print("mod %d numberable: %s" % (p, "yes" if out["colorable"][str(p)] else "no"))
        if is_knot:
            from .arrows import IntPolynomial

            print("ascending:  %s" % IntPolynomial(tuple(map(tuple, out["ascending"]))))
            print("descending: %s" % IntPolynomial(tuple(map(tuple, out["descending"]))))
            print("z^2 coefficient: %d" % out["c2"])
            for p in moduli:
                value = out["v2"][str(p)]
                print("v2 mod %d: %s" % (p, value if value is not None else "n/a (not numberable)"))
        if out["determinant"] is not None:
            print("determinant: %d" % out["determinant"])
            if is_knot:
                print("determinant class: %s (%s)" % (
                    out["mod8_class"],
                    "consistent" if out["mod8_consistent"] else "INCONSISTENT",
                ))
        for message in refusals:
            print(message)
    return 2 if refusals else 0


def _cmd_verify(args):
    names = args.checks or sorted(CHECKS)
    for name in names:
        if name not in CHECKS:
            raise PreconditionError(
                "unknown check %r; available: %s" % (name, ", ".join(sorted(CHECKS)))
            )
    config = SweepConfig(
        max_chords=args.max_chords,
        moduli=tuple(args.modulus) if args.modulus else (2, 3),
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
    )
    reports = run_checks(config, names)
    if args.json:
        print(reports_to_json(reports))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 0


def _cmd_enumerate(args):
    count = 0
    for diagram in enumerate_diagrams(args.chords, canonical=args.canonical):
        if args.colorable is not None and not is_mod_p_numberable(diagram, args.colorable):
            continue
        print(serialize_gauss_code(diagram))
        count += 1
        if args.limit is not None and count >= args.limit:
            break
    return 0


def _cmd_conway(args):
    variants = (args.variant,) if args.variant else ("ascending", "descending")
    for degree in range(args.degree + 1):
        circles = 1 if degree % 2 == 0 else 2
        for variant in variants:
            members = conway_set(degree, circles, variant).members
            for member in members:
                print("%d\t%s\t%s" % (degree, variant, member))
    return 0


_COMMANDS = {
    "invariants": _cmd_invariants,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "conway": _cmd_conway,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GaussCodeError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 1
    except VknotError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
