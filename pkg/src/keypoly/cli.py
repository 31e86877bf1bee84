"""Command-line interface: ``keypoly expand|classify|tableaux|verify``.

Exit status is 0 on success, 1 when an asserted verification suite finds a
counterexample and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from keypoly.classify import (
    cross_check_models,
    quasikey_zero_conjecture_sweep,
    verify_classification,
    verify_lemmas,
)
from keypoly.compositions import format_composition, km_witness, parse_composition
from keypoly.demazure import key_polynomial_demazure
from keypoly.kohnert import key_polynomial_kohnert
from keypoly.polynomial import format_plain
from keypoly.quasikey import enumerate_qkt, key_polynomial_quasikey, weight_of

log = logging.getLogger("keypoly")

MODELS = {
    "demazure": key_polynomial_demazure,
    "kohnert": key_polynomial_kohnert,
    "quasikey": key_polynomial_quasikey,
}
SUITES = {
    "classification": verify_classification,
    "models": cross_check_models,
    "lemmas": verify_lemmas,
    "conjecture": quasikey_zero_conjecture_sweep,
}
DEFAULT_GRID_CAP = 10**6


class UsageError(Exception):
    pass


def _composition(text: str):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse composition {text!r}: {exc}") from None


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_expand(args) -> int:
    poly = MODELS[args.model](args.alpha)
    if args.format == "structured":
        _emit(poly.to_records())
    else:
        print(format_plain(poly))
    return 0


def classify_line(alpha) -> str:
    witness = km_witness(alpha)
    if witness is None:
        return "multiplicity-free"
    pattern, positions = witness
    return f"has multiplicity: contains {format_composition(pattern)} at positions {format_composition(positions)}"


def cmd_classify(args) -> int:
    if args.format == "structured":
        witness = km_witness(args.alpha)
        doc = {"alpha": list(args.alpha), "multiplicity_free": witness is None}
        if witness is not None:
            doc["pattern"], doc["positions"] = list(witness[0]), list(witness[1])
        _emit(doc)
    else:
        print(classify_line(args.alpha))
    return 0


def cmd_tableaux(args) -> int:
    tableaux = enumerate_qkt(args.alpha)
    if args.format == "structured":
        _emit(
            {
                "alpha": list(args.alpha),
                "count": len(tableaux),
                "tableaux": [{"rows": [list(r) for r in t.rows], "weight": list(weight_of(t))} for t in tableaux],
            }
        )
        return 0
    print(f"#qKT({format_composition(args.alpha)}) = {len(tableaux)}")
    for t in tableaux:
        print()
        print(t.render())
    return 0


def cmd_verify(args) -> int:
    if args.n < 1 or args.max_part < 0:
        raise UsageError("need --n >= 1 and --max-part >= 0")
    size = (args.max_part + 1) ** args.n
    if size > args.max_grid and not args.force:
        raise UsageError(
            f"grid has {size} compositions, above the cap of {args.max_grid}; pass --force to run anyway"
        )
    log.info("running %s suite on n=%d, max_part=%d (%d compositions)", args.suite, args.n, args.max_part, size)
    report = SUITES[args.suite](args.n, args.max_part, jobs=args.jobs)
    doc = report.to_dict()
    if args.suite == "conjecture":
        failed = False
        doc["mismatches"] = doc["counterexamples"]
    else:
        failed = not report.ok
    if args.format == "structured":
        _emit(doc)
    else:
        print(
            f"{args.suite}: {doc['checked']} checked, {len(doc['mismatches'])} mismatches, "
            f"max coefficient {doc.get('max_coefficient', '-')}, {doc['elapsed_ms']:.0f} ms"
        )
        for line in doc.get("details", []):
            print(f"  {line}")
        for line in doc.get("findings", []):
            print(f"  note: {line}")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="keypoly", description="Key polynomials and their multiplicity-free classification.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "structured"), default="plain")

    p = sub.add_parser("expand", parents=[fmt], help="expand a key polynomial")
    p.add_argument("alpha", type=_composition, help="weak composition such as 0,2,1,2")
    p.add_argument("--model", choices=sorted(MODELS), default="demazure")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("classify", parents=[fmt], help="decide multiplicity-freeness by pattern avoidance")
    p.add_argument("alpha", type=_composition)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tableaux", parents=[fmt], help="list quasi-key tableaux")
    p.add_argument("alpha", type=_composition)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-part", type=int, required=True)
    p.add_argument("--suite", choices=sorted(SUITES), default="classification")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-grid", type=int, default=DEFAULT_GRID_CAP, help="refuse larger grids unless --force")
    p.add_argument("--force", action="store_true")
    p.add_argument("--format", choices=("plain", "structured"), default="structured")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2


if __name__ == "__main__":
    sys.exit(main())
