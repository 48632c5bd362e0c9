"""Command-line interface for annulus colorings, gadgets, and the exact solver.

Exit codes: 0 success, 1 negative verdict (improper coloring, infeasible
gadget), 2 usage or domain error (including malformed input files), 3
internal inconsistency (a self-check failed in a way that should be
impossible).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .gadgets import (
    GadgetInfeasible,
    PlacementSearchError,
    embed_moser_spindle,
    embed_odd_cycle,
    embed_rod,
    embed_trirod,
    embedding_to_json,
)
from .geometry import DEFAULT_TOLERANCE, Annulus, unit_chord_angle
from .radial import (
    coloring_from_json,
    coloring_to_json,
    construct_radial_coloring,
    radial_chromatic_number,
    thresholds,
    verify_radial_coloring,
)
from .schema import SchemaError
from .svg import render_embedding, render_radial_coloring
from .udg import MAX_VERTICES, chromatic_number_exact, graph_from_json
from . import __version__

TOLERANCE_ENV = "ANNULUS_CHROMA_TOLERANCE"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _resolve_tolerance(args) -> float:
    if args.tolerance is not None:
        value = args.tolerance
    else:
        raw = os.environ.get(TOLERANCE_ENV)
        if raw is None:
            return DEFAULT_TOLERANCE
        try:
            value = float(raw)
        except ValueError:
            raise SchemaError(f"{TOLERANCE_ENV} must be a number, got {raw!r}")
    if value <= 0.0:
        raise SchemaError(f"tolerance must be positive, got {value}")
    return value


def _emit(args, content: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(content if content.endswith("\n") else content + "\n")
    else:
        sys.stdout.write(content if content.endswith("\n") else content + "\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}")


def _band_for(r: float):
    for threshold in thresholds():
        if r <= threshold.max_r:
            return threshold
    return thresholds()[-1]


def cmd_chi_radial(args) -> int:
    try:
        n = radial_chromatic_number(args.r)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    theta = unit_chord_angle(0.5 + args.r)
    band = _band_for(args.r)
    if args.format == "json":
        _emit(args, json.dumps({
            "r": args.r,
            "N": n,
            "theta": theta,
            "band": {"colors": band.colors, "max_r": band.max_r, "expression": band.expression},
        }, indent=2))
    else:
        _emit(args, "\n".join([
            f"N={n}",
            f"theta={theta!r}",
            f"band: N={band.colors} for r <= {band.max_r!r}  [{band.expression}]",
        ]))
    return EXIT_OK


def cmd_table(args) -> int:
    rows = thresholds()
    if args.format == "json":
        _emit(args, json.dumps(
            [{"colors": t.colors, "max_r": t.max_r, "expression": t.expression} for t in rows],
            indent=2,
        ))
    else:
        lines = ["colors  max_r                  expression"]
        for t in rows:
            lines.append(f"{t.colors:<7d} {t.max_r:<22.15f} {t.expression}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        tolerance = _resolve_tolerance(args)
        coloring = construct_radial_coloring(args.r)
    except (ValueError, SchemaError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    verdict = verify_radial_coloring(coloring, tolerance)
    if not verdict.proper:
        return _fail(
            f"constructed coloring failed self-verification at r={args.r!r}: "
            f"witness {verdict.witness} in color {verdict.color}",
            EXIT_INTERNAL,
        )
    if args.format == "svg":
        _emit(args, render_radial_coloring(coloring))
    else:
        _emit(args, json.dumps(coloring_to_json(coloring), indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        tolerance = _resolve_tolerance(args)
        coloring = coloring_from_json(_load_json(args.path))
    except SchemaError as exc:
        return _fail(str(exc), EXIT_USAGE)
    verdict = verify_radial_coloring(coloring, tolerance)
    if args.format == "json":
        payload = {"proper": verdict.proper}
        if not verdict.proper:
            payload["color"] = verdict.color
            payload["pieces"] = list(verdict.piece_labels)
            payload["witness"] = [list(verdict.witness[0]), list(verdict.witness[1])]
        _emit(args, json.dumps(payload, indent=2))
    elif verdict.proper:
        _emit(args, "proper")
    else:
        p, q = verdict.witness
        _emit(args, "\n".join([
            "improper",
            f"color={verdict.color}",
            f"pieces={verdict.piece_labels[0]}; {verdict.piece_labels[1]}",
            f"witness=({p[0]!r}, {p[1]!r}) ({q[0]!r}, {q[1]!r})",
        ]))
    return EXIT_OK if verdict.proper else EXIT_NEGATIVE


def _run_embedder(args):
    if args.gadget == "rod":
        return embed_rod(args.r)
    if args.gadget == "cycle":
        return embed_odd_cycle(args.r)
    if args.gadget == "trirod":
        return embed_trirod(args.r)
    return embed_moser_spindle(args.r, seed=args.seed)


def cmd_embed(args) -> int:
    try:
        annulus = Annulus(args.r)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    try:
        embedding = _run_embedder(args)
    except GadgetInfeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        print(f"threshold={exc.threshold!r}", file=sys.stderr)
        return EXIT_NEGATIVE
    except PlacementSearchError as exc:
        return _fail(str(exc), EXIT_INTERNAL)
    if args.format == "svg":
        _emit(args, render_embedding(embedding, annulus))
    elif args.format == "text":
        lines = [
            f"kind={embedding.kind}",
            f"vertices={len(embedding.vertices)}",
            f"edges={len(embedding.edges)}",
            f"margin={embedding.margin!r}",
        ]
        for key, value in sorted(embedding.params.items()):
            lines.append(f"param {key}={value!r}")
        _emit(args, "\n".join(lines))
    else:
        _emit(args, json.dumps(embedding_to_json(embedding), indent=2))
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        graph = graph_from_json(_load_json(args.path))
    except SchemaError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if graph.n > MAX_VERTICES:
        return _fail(f"graph has {graph.n} vertices; the exact solver is capped at {MAX_VERTICES}", EXIT_USAGE)
    chi, assignment = chromatic_number_exact(graph)
    if args.format == "json":
        _emit(args, json.dumps({"chi": chi, "assignment": list(assignment)}, indent=2))
    else:
        _emit(args, "\n".join([
            f"chi={chi}",
            "assignment=" + ",".join(str(c) for c in assignment),
        ]))
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...], default_format: str) -> None:
    parser.add_argument("--format", choices=formats, default=default_format,
                        help=f"output format (default: {default_format})")
    parser.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    parser.add_argument("--tolerance", type=float, default=None,
                        help=f"geometric tolerance (default 1e-9, or ${TOLERANCE_ENV})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="annulus-chroma",
        description="Chromatic numbers of annuli under the unit-distance constraint.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    chi = sub.add_parser("chi-radial", help="radial chromatic number at half-width r")
    chi.add_argument("--r", type=float, required=True, help="annulus half-width, 0 < r < 1/2")
    _add_common(chi, ("text", "json"), "text")
    chi.set_defaults(func=cmd_chi_radial)

    table = sub.add_parser("table", help="threshold table of the radial chromatic number")
    _add_common(table, ("text", "json"), "text")
    table.set_defaults(func=cmd_table)

    construct = sub.add_parser("construct", help="build a proper radial coloring")
    construct.add_argument("--r", type=float, required=True, help="annulus half-width, 0 < r < 1/2")
    _add_common(construct, ("json", "svg"), "json")
    construct.set_defaults(func=cmd_construct)

    verify = sub.add_parser("verify", help="verify a radial coloring JSON file")
    verify.add_argument("path", help="path to a RadialColoring JSON document")
    _add_common(verify, ("text", "json"), "text")
    verify.set_defaults(func=cmd_verify)

    embed = sub.add_parser("embed", help="embed a gadget into the annulus")
    embed.add_argument("--gadget", choices=("rod", "cycle", "trirod", "spindle"), required=True)
    embed.add_argument("--r", type=float, required=True, help="annulus half-width, 0 < r < 1/2")
    embed.add_argument("--seed", type=int, default=0, help="seed for the placement search")
    _add_common(embed, ("json", "svg", "text"), "json")
    embed.set_defaults(func=cmd_embed)

    solve = sub.add_parser("solve", help="exact chromatic number of a graph JSON file")
    solve.add_argument("path", help="path to a graph JSON document")
    _add_common(solve, ("text", "json"), "text")
    solve.set_defaults(func=cmd_solve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SchemaError as exc:
        return _fail(str(exc), EXIT_USAGE)
    except OSError as exc:
        return _fail(str(exc), EXIT_USAGE)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
