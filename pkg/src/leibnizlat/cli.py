"""Command-line front end.

Exit codes: 0 success, 1 property-check failure (e.g. a failing verify
check), 2 input error.  All randomness flows from --seed; given identical
inputs and seeds, outputs are byte-identical across runs.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .linalg import BudgetExceeded, Field, LinalgError
from .algebra import AlgebraError, LeibnizAlgebra, check_left_leibniz
from . import catalog, lattice as lat_mod, verify as verify_mod
from .specfile import SpecError, emit_spec, export_dot, export_json_report, parse_spec

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class CliError(Exception):
    pass


def _parse_field(spec: str) -> Field:
    if spec in ("q", "Q", "rational"):
        return Field.rational()
    if spec.startswith("p="):
        try:
            return Field.prime(int(spec[2:]))
        except (ValueError, LinalgError) as exc:
            raise CliError("bad field %r: %s" % (spec, exc)) from None
    raise CliError("field must be 'p=<prime>' or 'rational', got %r" % spec)


def _load(path: str) -> LeibnizAlgebra:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc)) from None
    try:
        return parse_spec(text)
    except SpecError as exc:
        raise CliError("%s: %s" % (path, exc)) from None


def _cmd_check(args) -> int:
    l = _load(args.file)
    print("name: %s" % l.name)
    print("right_leibniz: true")  # construction would have failed otherwise
    print("left_leibniz: %s" % str(check_left_leibniz(l.field, l.table)).lower())
    print("symmetric: %s" % str(l.is_symmetric()).lower())
    print("lie: %s" % str(l.is_lie()).lower())
    return EXIT_OK


def _cmd_analyze(args) -> int:
    l = _load(args.file)
    report = lat_mod.build_structure_report(l, budget=args.budget)
    for key, value in report.to_dict().items():
        print("%s: %s" % (key, value))
    return EXIT_OK


def _cmd_lattice(args) -> int:
    l = _load(args.file)
    lat = lat_mod.enumerate_subalgebras(l)
    stats = lat_mod.lattice_stats(lat)
    modular = lat_mod.is_modular(lat)
    usm = lat_mod.is_upper_semimodular(lat)
    lsm = lat_mod.is_lower_semimodular_lattice(lat)
    wqi = lat_mod.all_subalgebras_wqi(l, lat)
    for key in ("nodes", "height", "atoms", "coatoms"):
        print("%s: %d" % (key, stats[key]))
    print("modular: %s" % str(modular.holds).lower())
    print("upper_semimodular: %s" % str(usm.holds).lower())
    print("lower_semimodular: %s" % str(lsm.holds).lower())
    print("all_wqi: %s" % str(wqi.holds).lower())
    print("frattini_dim: %d" % lat_mod.frattini_ideal(l, lat).dim)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(export_dot(lat))
    if args.json:
        report = {
            "algebra": l.name,
            "stats": stats,
            "modular": modular.holds,
            "upper_semimodular": usm.holds,
            "lower_semimodular": lsm.holds,
            "all_wqi": wqi.holds,
        }
        with open(args.json, "w") as fh:
            fh.write(export_json_report(report))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.corpus:
        algebras = catalog.corpus(args.seed)
    elif args.file:
        algebras = [_load(args.file)]
    else:
        raise CliError("verify needs a file or --corpus")
    ids = args.checks.split(",") if args.checks else None
    if ids:
        unknown = [i for i in ids if i not in verify_mod.CHECKS]
        if unknown:
            raise CliError("unknown check ids: %s" % ", ".join(unknown))
    summary = verify_mod.run_suite(algebras, ids)
    summary["seed"] = args.seed if args.corpus else None
    print("%-16s %6s %6s %6s" % ("check", "pass", "fail", "n/a"))
    for cid in sorted(summary["checks"]):
        entry = summary["checks"][cid]
        print(
            "%-16s %6d %6d %6d"
            % (cid, entry["pass"], entry["fail"], entry["not_applicable"])
        )
    for note in summary["notes"]:
        print("note: %s" % note)
    print("result: %s" % ("ok" if summary["ok"] else "FAILED"))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(export_json_report(summary))
    return EXIT_OK if summary["ok"] else EXIT_CHECK_FAILED


def _cmd_catalog(args) -> int:
    if args.action == "list":
        for name, (_, usage) in sorted(catalog.FAMILIES.items()):
            print(usage)
        return EXIT_OK
    # emit
    if not args.family:
        raise CliError("catalog emit needs a family name")
    if args.family not in catalog.FAMILIES:
        raise CliError("unknown family %r (try 'catalog list')" % args.family)
    builder, _ = catalog.FAMILIES[args.family]
    f = _parse_field(args.field)
    try:
        params = [int(x) for x in args.params]
    except ValueError:
        raise CliError("family parameters must be integers") from None
    try:
        l = builder(*params, f)
    except (TypeError, AlgebraError) as exc:
        raise CliError("cannot build %s%r: %s" % (args.family, tuple(params), exc)) from None
    text = emit_spec(l)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leibnizlat",
        description="Exact computations on finite-dimensional Leibniz algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a spec file and print identity verdicts")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("analyze", help="print the structure report")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=10 ** 6)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("lattice", help="build the subalgebra lattice and print verdicts")
    p.add_argument("file")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("verify", help="run theorem checks on a file or the corpus")
    p.add_argument("file", nargs="?")
    p.add_argument("--corpus", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--checks", metavar="ID,ID,...")
    p.add_argument("--json", metavar="PATH")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog", help="list families or emit a spec file")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("family", nargs="?")
    p.add_argument("params", nargs="*")
    p.add_argument("--field", default="p=3")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (BudgetExceeded, AlgebraError, LinalgError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
