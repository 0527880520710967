"""Command line front end: ``exotic-mtc <subcommand> [options]``.

Exit status is 0 when no check fails, 1 on any FAIL and 2 when an input file
cannot be parsed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import moddata as M
from . import suites
from .center.data import CategoryDataError
from .fusion import FusionError
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load_modular_data(path: str) -> M.ModularData:
    """A file path, or the name of a bundled dataset (z_e6, z_haagerup)."""
    if path in M.BUNDLED:
        return M.bundled(path)
    return M.load(path)


def _datasets(args: argparse.Namespace) -> list[M.ModularData]:
    if args.data:
        return [load_modular_data(p) for p in args.data]
    return [M.bundled(name) for name in M.BUNDLED]


def _per_dataset(fn, args: argparse.Namespace, report: Report, **kw) -> None:
    for md in _datasets(args):
        fn(md, report, **kw)


def cmd_verify(args: argparse.Namespace, report: Report) -> None:
    _per_dataset(suites.verify, args, report)


def cmd_fusion(args: argparse.Namespace, report: Report) -> None:
    for md in _datasets(args):
        suites.fusion(md, report)
        if args.show:
            from .fusion import verlinde

            fr = verlinde(md)
            for i in range(fr.rank):
                for j in range(i, fr.rank):
                    print(f"{fr.labels[i]} * {fr.labels[j]} = {fr.format(fr.product(i, j))}")


def cmd_subcats(args: argparse.Namespace, report: Report) -> None:
    _per_dataset(suites.subcategories, args, report)


def cmd_sl2z(args: argparse.Namespace, report: Report) -> None:
    _per_dataset(suites.sl2z, args, report, closure=not args.no_closure, cap=args.cap)


def cmd_braid(args: argparse.Namespace, report: Report) -> None:
    for md in _datasets(args):
        if args.object is not None and args.object not in md.labels:
            raise InputError(f"unknown object {args.object!r}")
        if args.target is not None and args.target not in md.labels:
            raise InputError(f"unknown object {args.target!r}")
        suites.braid_eigs(md, report, obj=args.object, target=args.target)


def cmd_center(args: argparse.Namespace, report: Report) -> None:
    path = args.data[0] if args.data else None
    suites.center_e6(path, report)


def cmd_exclude(args: argparse.Namespace, report: Report) -> None:
    suites.exclude(report, listing=print if args.report else None)


def cmd_coset(args: argparse.Namespace, report: Report) -> None:
    suites.coset(report)


COMMANDS = {
    "verify": (cmd_verify, "modular data axioms, quantum order, central charge"),
    "fusion": (cmd_fusion, "Verlinde fusion rules and printed tables"),
    "subcats": (cmd_subcats, "fusion subcategories, primality, grading"),
    "sl2z": (cmd_sl2z, "SL(2,Z) relations and image order"),
    "braid-eigs": (cmd_braid, "braid eigenvalues and irreducibility"),
    "center-e6": (cmd_center, "rebuild Z(E) from the skeletal E6 data"),
    "exclude": (cmd_exclude, "quantum group and orbifold exclusions"),
    "coset": (cmd_coset, "the D35/A7 coset arithmetic"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exotic-mtc", description="Exact checks for two exotic modular tensor categories.")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--all", action="store_true", help="run every claim, each mapped to named checks")
    p.add_argument("--no-closure", action="store_true", help="with --all, skip the matrix group enumeration")
    sub = p.add_subparsers(dest="command")
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--data", action="append", help="input file or bundled name (repeatable)")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        if name == "fusion":
            sp.add_argument("--show", action="store_true", help="print all products")
        if name == "sl2z":
            sp.add_argument("--no-closure", action="store_true", default=argparse.SUPPRESS)
            sp.add_argument("--cap", type=int, default=40000)
        if name == "braid-eigs":
            sp.add_argument("--object", help="label of the braided object")
            sp.add_argument("--target", help="report squared eigenvalues on Hom(target, X^3)")
        if name == "exclude":
            sp.add_argument("--report", action="store_true", help="print the candidate lists")
    return p


def run(argv: Sequence[str] | None = None) -> tuple[Report, int, argparse.Namespace | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own usage message
        return Report(), EXIT_INPUT if exc.code else EXIT_OK, None
    report = Report()
    try:
        if args.all:
            suites.claims(report, closure=not args.no_closure)
        elif args.command:
            COMMANDS[args.command][0](args, report)
        else:
            parser.print_usage(sys.stderr)
            return report, EXIT_INPUT, args
    except (M.ModularDataError, CategoryDataError, FusionError, InputError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return report, EXIT_INPUT, args
    return report, EXIT_OK if report.ok else EXIT_FAIL, args


def main(argv: Sequence[str] | None = None) -> int:
    report, code, args = run(argv)
    if args is not None and code != EXIT_INPUT:
        print(report.to_json() if args.json else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
