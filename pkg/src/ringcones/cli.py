"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 size cap.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import export
from .category import build_category, default_caps
from .cones import default_cone_cap, build_cone_ring
from .errors import InvalidSpec, ParseError, RRViolation, SizeExceeded
from .ring import FiniteRing, find_isomorphism, parse_ring_spec
from .verify import SUITES, run_suites, verify_preadditive, verify_proper_category

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_SIZE = 0, 1, 2, 3


@dataclass
class RunConfig:
    ring: str
    side: str = "left"
    suites: list[str] = field(default_factory=lambda: ["all"])
    export: str = "none"
    out: str | None = None
    max_objects: int | None = None
    max_morphisms: int | None = None
    max_cones: int | None = None
    early_exit: bool = False
    dot_counts: bool = False

    @property
    def caps(self) -> dict:
        return {"max_objects": self.max_objects, "max_morphisms": self.max_morphisms}


def _out_path(config: RunConfig, command: str, ext: str) -> Path:
    if config.out:
        return Path(config.out)
    slug = re.sub(r"[^A-Za-z0-9]+", "_", config.ring).strip("_")
    return Path(f"{command}-{slug}-{config.side}.{ext}")


def _write(path: Path, text: str) -> None:
    path.write_text(text)
    print(f"wrote {path}")


def cmd_build(config: RunConfig) -> int:
    ring = parse_ring_spec(config.ring)
    cat = build_category(ring, config.side, **config.caps)
    print(f"{config.side} ideal category of {ring.label}: {len(cat.objects)} objects, {cat.morphism_count} morphisms")
    for obj in cat.objects:
        print(f"  {cat.label(obj)} = {{{', '.join(map(str, obj.elements))}}}")
    if config.export == "json":
        _write(_out_path(config, "build", "json"), export.dumps(export.category_to_dict(cat)))
    elif config.export == "dot":
        _write(_out_path(config, "build", "dot"), export.category_to_dot(cat, counts=config.dot_counts))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    ring = parse_ring_spec(config.ring)
    reports = run_suites(ring, config.side, config.suites, config.early_exit, **config.caps)
    for rep in reports:
        print(rep.render())
    ok = all(r.passed for r in reports)
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    if config.export == "json":
        _write(_out_path(config, "verify", "json"), export.dumps(export.reports_to_dict(ring.label, config.side, reports)))
    return EXIT_OK if ok else EXIT_FAIL


def _cone_ring(config: RunConfig):
    ring = parse_ring_spec(config.ring)
    cat = build_category(ring, config.side, **config.caps)
    try:
        return build_cone_ring(cat, config.max_cones)
    except RRViolation as exc:
        print(f"refused: {exc}")
        print(exc.report.render(timing=False))
        return None


def cmd_cone_ring(config: RunConfig) -> int:
    cr = _cone_ring(config)
    if cr is None:
        return EXIT_FAIL
    print(f"ring of proper cones of {cr.category.source_ring.label} ({config.side}): order {cr.order}")
    print(cr.report.render())
    if config.export == "json":
        _write(_out_path(config, "cone-ring", "json"), export.dumps(export.cone_ring_to_dict(cr)))
    return EXIT_OK if cr.ok else EXIT_FAIL


def cmd_iterate(config: RunConfig) -> int:
    """Build PL(R), treat it as a ring, and check its own ideal category once."""
    cr = _cone_ring(config)
    if cr is None:
        return EXIT_FAIL
    print(f"PL({cr.category.source_ring.label}) has order {cr.order}")
    try:
        pl: FiniteRing = cr.to_finite_ring()
    except ValueError as exc:
        print(f"cannot iterate: {exc}")
        return EXIT_FAIL
    if pl.order <= 32:
        iso = find_isomorphism(pl, cr.category.ring)
        print(f"isomorphic to the ring whose left ideals were used: {'yes' if iso else 'no'}")
    cat = build_category(pl, config.side, **config.caps)
    print(f"{config.side} ideal category of {pl.label}: {len(cat.objects)} objects, {cat.morphism_count} morphisms")
    reports = [verify_preadditive(cat), verify_proper_category(cat)]
    for rep in reports:
        print(rep.render())
    if config.export == "json":
        data = export.reports_to_dict(pl.label, config.side, reports)
        data["cone_ring"] = export.cone_ring_to_dict(cr)
        _write(_out_path(config, "iterate", "json"), export.dumps(data))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {"build": cmd_build, "verify": cmd_verify, "cone-ring": cmd_cone_ring, "iterate": cmd_iterate}


def _suite_list(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [n for n in names if n not in SUITES and n != "all"]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown suites {bad}; choose from {', '.join(SUITES)}, all")
    return names


def make_parser() -> argparse.ArgumentParser:
    max_objects, max_morphisms = default_caps()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", required=True, help="zmod:<n> | prod:<spec>,<spec> | mat:<k>:zmod:<p>")
    common.add_argument("--side", choices=("left", "right"), default="left")
    common.add_argument("--export", choices=("none", "json", "dot"), default="none")
    common.add_argument("--out", help="export file path")
    common.add_argument("--max-objects", type=int, default=max_objects)
    common.add_argument("--max-morphisms", type=int, default=max_morphisms)
    common.add_argument("--max-cones", type=int, default=default_cone_cap())
    common.add_argument("--early-exit", action="store_true", help="stop after the first failing suite")
    common.add_argument("--dot-counts", action="store_true", help="collapse DOT edges to per-hom-set counts")

    parser = argparse.ArgumentParser(prog="ringcones", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common], help="build the ideal category")
    verify = sub.add_parser("verify", parents=[common], help="run verification suites")
    verify.add_argument("--suites", type=_suite_list, default=["all"])
    sub.add_parser("cone-ring", parents=[common], help="build the ring of proper cones")
    sub.add_parser("iterate", parents=[common], help="ideal category of the ring of proper cones")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    if args.command != "build" and args.export == "dot":
        print("--export dot is only available for build", file=sys.stderr)
        return EXIT_INPUT
    config = RunConfig(
        ring=args.ring,
        side=args.side,
        suites=getattr(args, "suites", ["all"]),
        export=args.export,
        out=args.out,
        max_objects=args.max_objects,
        max_morphisms=args.max_morphisms,
        max_cones=args.max_cones,
        early_exit=args.early_exit,
        dot_counts=args.dot_counts,
    )
    try:
        return COMMANDS[args.command](config)
    except (ParseError, InvalidSpec) as exc:
        print(f"invalid ring spec: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeExceeded as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE


if __name__ == "__main__":
    sys.exit(main())
