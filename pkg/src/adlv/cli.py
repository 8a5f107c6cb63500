"""Command-line interface.

Subcommands: ``eval`` (parse an element, print length/word/Omega part),
``dim`` (three-route dimension report), ``newton`` (class invariant),
``straight-classes`` (atlas of straight classes, optionally cached),
``enumerate`` (verification harness over all elements up to a length bound),
``verify`` (replay a cached atlas against fresh computation).

Output is JSON Lines by default, or an aligned table with ``--format table``.
Exit codes: 0 success, 2 parse/config error, 3 verification failure,
4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import atlas as _atlas
from . import classes as _classes
from .cartan import rational_str
from .demazure import DEFAULT_HORIZON
from .dims import dim_generic
from .errors import ConfigError, ResourceCapError, VerificationError
from .harness import run_harness
from .weyl import EAWGroup

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_VERIFY = 3
EXIT_RESOURCE = 4


def _add_group_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="cartan_type", default="A1", help="Cartan type, e.g. A2 (default A1)")
    p.add_argument("--lattice", choices=("coroot", "coweight"), default="coroot")
    p.add_argument("--sigma", default="id", help="automorphism: id, swap(i,j), perm[...], ad:pi<k>, '*'-compositions")
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adlv", description=__doc__.split("\n", 1)[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="parse an element; print length, reduced word, Omega part")
    p.add_argument("element")
    _add_group_options(p)

    p = sub.add_parser("dim", help="dimension report for one element, all three routes")
    p.add_argument("element")
    _add_group_options(p)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)

    p = sub.add_parser("newton", help="class invariant (Kottwitz class, Newton point) of an element")
    p.add_argument("element")
    _add_group_options(p)

    p = sub.add_parser("straight-classes", help="atlas of straight classes up to a length bound")
    _add_group_options(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--cache", help="write the atlas to this path")

    p = sub.add_parser("enumerate", help="run verification checks over all elements up to a length bound")
    _add_group_options(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--check", choices=("main", "bruhat", "hecke", "all"), default="all")
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="replay a cached atlas against fresh computation")
    p.add_argument("--cache", required=True)
    p.add_argument("--format", choices=("jsonl", "table"), default="jsonl")

    return parser


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "jsonl":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
        return
    if not rows:
        return
    keys = sorted({k for row in rows for k in row})
    widths = {k: max(len(k), *(len(_cell(r.get(k))) for r in rows)) for k in keys}
    out.write("  ".join(k.ljust(widths[k]) for k in keys).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(_cell(row.get(k)).ljust(widths[k]) for k in keys).rstrip() + "\n")


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _group_sigma(args):
    group = EAWGroup.from_config(f"type={args.cartan_type};lattice={args.lattice}")
    return group, group.parse_sigma(args.sigma)


def _invariant_row(w, sigma) -> dict:
    inv = _classes.class_invariant(w, sigma)
    return {
        "element": w.group.canonical_str(w),
        "kappa": sorted(inv.kappa.members),
        "nu": [rational_str(c) for c in inv.nu.nu.coords],
        "newton_exponent": _classes.newton_exponent(w, sigma),
        "straight": _classes.is_straight(w, sigma),
    }


def _run(args, out) -> int:
    if args.command == "eval":
        group, _ = _group_sigma(args)
        w = group.parse(args.element)
        word, om = group.as_word(w)
        _emit(
            [
                {
                    "element": group.canonical_str(w),
                    "length": w.length(),
                    "reduced_word": list(word),
                    "omega": om,
                    "translation": [str(c) for c in w.translation.coords],
                }
            ],
            args.format,
            out,
        )
        return EXIT_OK

    if args.command == "dim":
        group, sigma = _group_sigma(args)
        report = dim_generic(group.parse(args.element), sigma, args.horizon, strict=False)
        _emit([report.to_dict()], args.format, out)
        return EXIT_OK if report.agree else EXIT_VERIFY

    if args.command == "newton":
        group, sigma = _group_sigma(args)
        _emit([_invariant_row(group.parse(args.element), sigma)], args.format, out)
        return EXIT_OK

    if args.command == "straight-classes":
        group, sigma = _group_sigma(args)
        atlas = _atlas.compute_atlas(sigma, args.max_len)
        rows = [
            {
                "kappa": sorted(c.invariant.kappa.members),
                "nu": [rational_str(x) for x in c.invariant.nu.nu.coords],
                "min_length": c.min_length,
                "representative": group.canonical_str(c.representative),
            }
            for c in atlas.classes
        ]
        _emit(rows, args.format, out)
        if args.cache:
            _atlas.save_atlas(args.cache, atlas)
        return EXIT_OK

    if args.command == "enumerate":
        group, sigma = _group_sigma(args)
        result = run_harness(sigma, args.max_len, args.check, args.horizon, args.workers)
        _emit(result.records + [result.summary()], args.format, out)
        return EXIT_OK if not result.failures else EXIT_VERIFY

    if args.command == "verify":
        ok, message = _atlas.verify_atlas(args.cache)
        _emit([{"ok": ok, "message": message}], args.format, out)
        return EXIT_OK if ok else EXIT_VERIFY

    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = _run(args, sys.stdout)
    except ConfigError as exc:
        _error(exc, EXIT_CONFIG)
        return EXIT_CONFIG
    except VerificationError as exc:
        _error(exc, EXIT_VERIFY)
        return EXIT_VERIFY
    except ResourceCapError as exc:
        _error(exc, EXIT_RESOURCE)
        return EXIT_RESOURCE
    except FileNotFoundError as exc:
        _error(exc, EXIT_CONFIG)
        return EXIT_CONFIG
    return code


def _error(exc: Exception, code: int) -> None:
    sys.stdout.write(json.dumps({"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}) + "\n")
    print(f"adlv: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
