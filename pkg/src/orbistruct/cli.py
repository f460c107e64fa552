"""Command-line interface.

    orbistruct analyze --gamma A5 --b A4 --delta A3 [--lambda "(1 2 3)"]
    orbistruct sweep S4 [--only-incompatible] [--only-unsaturated]
    orbistruct catalog list | catalog show NAME
    orbistruct product "(1 2)" "(2 3)"

Group specs are catalog names or ';'-separated generator lists in cycle
notation.  Reports go to stdout, diagnostics to stderr.  Exit status is 0 on
success, 2 on invalid input and 1 on resource or internal errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .catalog import BUILTIN_CATALOG, CatalogError, get_entry, sweep
from .cycles import parse_generators, parse_product
from .errors import (
    ChainError,
    CycleParseError,
    DegreeMismatchError,
    NotNormalError,
    NotSubgroupError,
    OrbistructError,
)
from .groups import PermGroup, closure
from .iso import named_iso_class
from .report import ReportDocument, report_dict, report_text, sweep_dict, sweep_text
from .substructure import SubgroupChain, analyze_chain

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2

_VALIDATION_ERRORS = (
    ChainError,
    CycleParseError,
    CatalogError,
    DegreeMismatchError,
    NotSubgroupError,
    NotNormalError,
)


def _spec_degree(spec: str) -> int:
    if spec in BUILTIN_CATALOG:
        return BUILTIN_CATALOG[spec].degree
    return parse_generators(spec)[0].degree


def resolve_group(spec: str, degree: int | None = None) -> PermGroup:
    """A catalog name or a generator list, realized on ``degree`` points."""
    spec = spec.strip()
    if spec in BUILTIN_CATALOG:
        return get_entry(spec).build(degree)
    if not spec.startswith("("):
        raise CatalogError(f"{spec!r} is neither a catalog name nor a generator list")
    gens = parse_generators(spec, degree)
    n = gens[0].degree if degree is None else degree
    return closure(gens, n)


def _emit(doc: ReportDocument, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(doc.to_json())
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace) -> int:
    degree = max(_spec_degree(s) for s in (args.gamma, args.b, args.delta))
    gamma = resolve_group(args.gamma, degree)
    b = resolve_group(args.b, degree)
    delta = resolve_group(args.delta, degree)
    chain = SubgroupChain(gamma, b, delta)
    custom = resolve_group(args.lambda_, degree) if args.lambda_ else None
    report = analyze_chain(chain, custom_lambda=custom)
    for w in report.warnings:
        print(f"warning: {w}", file=sys.stderr)
    payload = report_dict(report)
    command = {"name": "analyze", "gamma": args.gamma, "b": args.b, "delta": args.delta}
    if args.lambda_:
        command["lambda"] = args.lambda_
    doc = ReportDocument("analysis", command, payload, list(report.warnings))
    _emit(doc, args.format, report_text(payload))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    g = resolve_group(args.group)
    name = args.group if args.group in BUILTIN_CATALOG else ""
    result = sweep(g, name, workers=args.workers)
    for w in result.warnings:
        print(f"warning: {w}", file=sys.stderr)
    payload = sweep_dict(result, args.only_incompatible, args.only_unsaturated)
    command = {
        "name": "sweep",
        "group": args.group,
        "only_incompatible": args.only_incompatible,
        "only_unsaturated": args.only_unsaturated,
    }
    doc = ReportDocument("sweep", command, payload, list(result.warnings))
    _emit(doc, args.format, sweep_text(payload))
    return EXIT_OK


def _entry_dict(name: str, with_elements: bool = False) -> dict:
    e = get_entry(name)
    g = e.build()
    out = {"name": name, "degree": e.degree, "generators": list(e.generators), "order": g.order,
           "label": named_iso_class(g)}
    if with_elements:
        out["elements"] = [str(x) for x in g.elements]
    return out


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        groups = [_entry_dict(n) for n in BUILTIN_CATALOG]
        text = "".join(
            f"{g['name']:<8} degree {g['degree']:<2} order {g['order']:<4} {';'.join(g['generators']) or '()'}\n"
            for g in groups
        )
        command = {"name": "catalog list"}
    else:
        if not args.name:
            raise CatalogError("catalog show needs a group name")
        g = _entry_dict(args.name, with_elements=True)
        groups = [g]
        text = (
            f"{g['name']}: degree {g['degree']}, order {g['order']}, isomorphism type {g['label']}\n"
            f"generators: {';'.join(g['generators']) or '()'}\n"
            f"elements: {', '.join(g['elements'])}\n"
        )
        command = {"name": "catalog show", "group": args.name}
    doc = ReportDocument("catalog", command, {"groups": groups})
    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    p = parse_product(args.expressions, args.degree)
    print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbistruct",
        description="Inherited orbifold substructures of group-algebra subgroup chains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="text")

    a = sub.add_parser("analyze", help="analyze one chain Δ ≤ B ≤ Γ")
    a.add_argument("--gamma", required=True, help="catalog name or generators of Γ")
    a.add_argument("--b", required=True, help="catalog name or generators of B")
    a.add_argument("--delta", required=True, help="catalog name or generators of Δ")
    a.add_argument("--lambda", dest="lambda_", help="generators of a non-canonical Λ for R[Δ] in O")
    add_format(a)
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="analyze every chain class of a group")
    s.add_argument("group", help="catalog name or generators")
    s.add_argument("--only-incompatible", action="store_true")
    s.add_argument("--only-unsaturated", action="store_true")
    s.add_argument("--workers", type=int, default=None, help="process pool size")
    add_format(s)
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("catalog", help="list or show built-in groups")
    c.add_argument("action", choices=("list", "show"))
    c.add_argument("name", nargs="?")
    add_format(c)
    c.set_defaults(func=cmd_catalog)

    p = sub.add_parser("product", help="compose cycle expressions (rightmost applied first)")
    p.add_argument("expressions", nargs="+")
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_product)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OrbistructError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
