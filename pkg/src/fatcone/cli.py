"""``fatcone`` command line.

Exit codes: 0 success, 1 a mathematical check failed (a bug), 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import FieldError, parse_field
from .fatpoints import SchemeError, fat_point_ideal, load_scheme, restrict_to_hyperplane, truncation
from .hypercone import ConstructionError, construction_report, theorem_poincare
from .lift import criterion_witnesses
from .resolve import BiPoly, betti, direct_resolution, format_betti_table

EXIT_OK, EXIT_BUG, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(args):
    field = None
    if args.field is not None:
        try:
            field = parse_field(args.field)
        except (FieldError, ValueError) as exc:
            raise InputError(f"unsupported field {args.field!r}: {exc}") from exc
    try:
        Z, raw = load_scheme(args.path, field)
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror or exc}") from exc
    except (SchemeError, FieldError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    codim = raw.get("codim", 1)
    if not isinstance(codim, int) or isinstance(codim, bool):
        raise InputError(f"codim must be an integer, got {codim!r}")
    return Z, codim


def _emit(args, data: dict, lines):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _trivial(args):
    P = BiPoly.one()
    data = {"betti": P.table_text(), "poincare": str(P), "minimal": True, "criterion_flags": []}
    _emit(args, data, [P.table_text(), f"poincare: {P}", "minimal: yes"])
    return EXIT_OK


def _yn(flag) -> str:
    return "yes" if flag else "no"


def cmd_resolve(args) -> int:
    Z, codim = _load(args)
    if Z.is_empty():
        return _trivial(args)
    rep = construction_report(Z, codim, bound=args.bound, exactness=args.verify)
    data = rep.to_json()
    if not args.verify:
        for k in ("exactness_bound", "exactness_ok"):
            data.pop(k)
    lines = [
        rep.betti.table_text(),
        f"poincare: {rep.poincare_constructed}",
        f"minimal: {_yn(rep.minimal)}",
        "criterion: " + " ".join(_yn(f) for f in rep.criterion_flags),
        f"status: {rep.status}",
    ]
    if args.minimize and rep.minimized_betti is not None:
        lines += ["minimized:", rep.minimized_betti.table_text()]
    if args.verify:
        lines.append(f"complex: {'ok' if rep.complex_ok else 'FAILED'}")
        lines.append(f"exactness: {'ok' if rep.exactness_ok else 'FAILED'} (degrees <= {rep.exactness_bound})")
        lines.append(f"ideal: {'ok' if rep.ideal_ok else 'FAILED'}")
    _emit(args, data, lines)
    if args.verify and not (rep.complex_ok and rep.exactness_ok and rep.ideal_ok):
        return EXIT_BUG
    return EXIT_OK


def cmd_oracle(args) -> int:
    Z, _ = _load(args)
    if Z.is_empty():
        return _trivial(args)
    P = betti(direct_resolution(fat_point_ideal(Z)))
    data = {"betti": P.table_text(), "poincare": str(P), "minimal": True}
    _emit(args, data, [P.table_text(), f"poincare: {P}"])
    return EXIT_OK


def _ladder_ideals(Z):
    Y = restrict_to_hyperplane(Z)
    R = Y.ring(1)
    return [fat_point_ideal(truncation(Y, i), R) for i in range(Z.max_multiplicity + 1)]


def cmd_criterion(args) -> int:
    Z, _ = _load(args)
    if Z.is_empty():
        _emit(args, {"levels": []}, ["no levels"])
        return EXIT_OK
    ideals = _ladder_ideals(Z)
    levels, lines = [], []
    for i in range(1, len(ideals)):
        w = criterion_witnesses(ideals[i], ideals[i - 1])
        levels.append({"level": i, "holds": w["holds"], "witnesses": w["witnesses"]})
        tag = ", ".join(w["witnesses"]) or "none"
        lines.append(f"level {i}: {'holds' if w['holds'] else 'fails'} (witnesses: {tag})")
    _emit(args, {"levels": levels}, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    Z, codim = _load(args)
    if Z.is_empty():
        _emit(args, {"complex_ok": True, "exactness_ok": True}, ["complex: ok", "exactness: ok"])
        return EXIT_OK
    rep = construction_report(Z, codim, bound=args.bound)
    data = {
        "complex_ok": rep.complex_ok,
        "exactness_ok": rep.exactness_ok,
        "exactness_bound": rep.exactness_bound,
        "ideal_ok": rep.ideal_ok,
    }
    lines = [
        f"complex: {'ok' if rep.complex_ok else 'FAILED'}",
        f"exactness: {'ok' if rep.exactness_ok else 'FAILED'} (degrees <= {rep.exactness_bound})",
        f"ideal: {'ok' if rep.ideal_ok else 'FAILED'}",
    ]
    for fail in rep.failures:
        lines.append(f"  degree {fail[0]}, position {fail[1]}: {fail[2]} vs {fail[3]}")
    _emit(args, data, lines)
    return EXIT_OK if rep.complex_ok and rep.exactness_ok and rep.ideal_ok else EXIT_BUG


def cmd_formula(args) -> int:
    Z, _ = _load(args)
    if Z.is_empty():
        return _trivial(args)
    ideals = _ladder_ideals(Z)
    polys = [betti(direct_resolution(I)) for I in ideals[1:]]
    flags = [criterion_witnesses(ideals[i], ideals[i - 1])["holds"] for i in range(1, len(ideals))]
    P = theorem_poincare(polys, Z.max_multiplicity)
    data = {"poincare_formula": str(P), "criterion_flags": flags, "verified": all(flags)}
    lines = [f"poincare: {P}"]
    if not all(flags):
        lines.append("caveat: containment criterion fails; the formula may not give the Betti numbers")
    _emit(args, data, lines)
    return EXIT_OK


COMMANDS = {
    "resolve": (cmd_resolve, "construct the resolution by mapping cones"),
    "oracle": (cmd_oracle, "resolve the ideal directly in the full ring"),
    "criterion": (cmd_criterion, "check I(Z_i+1) in R_1 I(Z_i) level by level"),
    "verify": (cmd_verify, "check the constructed complex is an exact resolution"),
    "formula": (cmd_formula, "Poincare polynomial from the ladder alone"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatcone", description="Resolutions of fat points in a hyperplane.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("path", help="scheme file (JSON)")
        p.add_argument("--field", help="q or gf:<p>; overrides the file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name in ("resolve", "verify"):
            p.add_argument("--bound", type=int, help="top degree for the exactness check")
        if name == "resolve":
            p.add_argument("--verify", action="store_true", help="also run complex and exactness checks")
            p.add_argument("--minimize", action="store_true", help="print the minimized table when not minimal")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func = COMMANDS[args.verb][0]
    try:
        return func(args)
    except (InputError, SchemeError, FieldError) as exc:
        print(f"fatcone: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConstructionError, AssertionError, ArithmeticError) as exc:
        print(f"fatcone: internal check failed: {exc}", file=sys.stderr)
        return EXIT_BUG


if __name__ == "__main__":
    sys.exit(main())
