"""Command line interface.

Machine-readable results go to stdout as JSON, diagnostics to stderr.
Exit codes: 0 valid/pass, 1 invalid/fail, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import audit as audit_mod
from .convex import central_symmetral, convex_hull, difference_body, relative_distance
from .family import SearchParams, TranslateFamily, search_max_family, validate
from .geom import SimplePolygon
from .io import ParseError, ValidationError, parse_point, parse_shape_file, parse_vectors, to_jsonable
from .placement import default_threads
from .shape import (
    hadwiger_bounds,
    kernel_center,
    kernel_vertices,
    parallelogram_like_witness,
    pockets,
    star_kernel,
)
from .star import SegmentStar
from .svg import render_svg


class UsageError(Exception):
    pass


def _read_shape(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read shape file: {exc}") from exc
    return parse_shape_file(text)


def _read_vectors(arg: str):
    text = arg
    if not arg.lstrip().startswith(("[", "{")):
        try:
            text = Path(arg).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"vectors are neither inline JSON nor a readable file: {exc}") from exc
    return parse_vectors(text)


def _emit(obj) -> None:
    json.dump(to_jsonable(obj), sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _polygon(shape, command: str) -> SimplePolygon:
    if not isinstance(shape, SimplePolygon):
        raise UsageError(f"'{command}' needs a polygon shape")
    return shape


def cmd_classify(args) -> int:
    shape = _read_shape(args.shape)
    if isinstance(shape, SegmentStar):
        _emit({"kind": "segment_star", "bounds": hadwiger_bounds(shape)})
        return 0
    rep = pockets(shape)
    kernel = star_kernel(shape)
    _emit({
        "kind": "polygon",
        "pockets": rep,
        "kernel": kernel,
        "kernel_vertices": list(kernel_vertices(shape)),
        "parallelogram_like": parallelogram_like_witness(shape),
        "bounds": hadwiger_bounds(shape),
    })
    return 0


def cmd_validate(args) -> int:
    shape = _read_shape(args.shape)
    fam = TranslateFamily(shape, tuple(_read_vectors(args.vectors)))
    report = validate(fam)
    _emit({"size": len(fam), "report": report})
    return 0 if report.valid else 1


def cmd_search(args) -> int:
    shape = _read_shape(args.shape)
    params = SearchParams(samples_per_family=args.samples, beam_width=args.beam,
                          max_backtrack_nodes=args.nodes, seed=args.seed, threads=args.threads)
    result = search_max_family(shape, params)
    _emit({
        "size": len(result.family),
        "vectors": list(result.family.vectors),
        "candidates": result.candidates,
        "exhaustive": result.exhaustive,
        "params": {"samples_per_family": params.samples_per_family, "beam_width": params.beam_width,
                   "max_backtrack_nodes": params.max_backtrack_nodes, "seed": params.seed},
        "report": validate(result.family),
        "bounds": hadwiger_bounds(shape),
    })
    return 0


def cmd_audit(args) -> int:
    shape = _polygon(_read_shape(args.shape), "audit")
    center = parse_point(args.center, "--center") if args.center else kernel_center(shape)
    if center is None:
        print("error: shape is not starlike", file=sys.stderr)
        return 1
    S = audit_mod.recenter(shape, center)
    fam = TranslateFamily(S, tuple(_read_vectors(args.vectors)))
    try:
        report = audit_mod.audit_theorem1(S, fam)
    except audit_mod.AuditPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = to_jsonable(report)
    out["center"] = to_jsonable(center)
    _emit(out)
    return 0 if report.passed else 1


def cmd_render(args) -> int:
    shape = _read_shape(args.shape)
    fam = TranslateFamily(shape, tuple(_read_vectors(args.vectors)))
    report = validate(fam)
    if not report.valid and not args.allow_invalid:
        _emit({"report": report})
        print("error: family is invalid (use --allow-invalid to render it)", file=sys.stderr)
        return 1
    svg = render_svg(fam, report, show_vectors=args.vectors_arrows)
    if args.output == "-":
        sys.stdout.write(svg)
    else:
        Path(args.output).write_text(svg, encoding="utf-8")
        _emit({"output": args.output, "members": len(fam), "valid": report.valid})
    return 0


def cmd_symmetral(args) -> int:
    shape = _read_shape(args.shape)
    pts = shape.vertices if isinstance(shape, SimplePolygon) else shape.points()
    K = convex_hull(pts)
    _emit({"hull": K, "difference_body": difference_body(K), "central_symmetral": central_symmetral(K)})
    return 0


def cmd_relnorm(args) -> int:
    shape = _read_shape(args.shape)
    pts = shape.vertices if isinstance(shape, SimplePolygon) else shape.points()
    K = convex_hull(pts)
    p, q = parse_point(args.p, "p"), parse_point(args.q, "q")
    _emit({"p": p, "q": q, "distance": relative_distance(K, p, q)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kisslab", description="Exact Hadwiger-number toolkit for polygonal disks.")
    ap.add_argument("--threads", type=int, default=None,
                    help="worker processes for candidate checks (default: $KISSLAB_THREADS or 1)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="pockets, kernel and Hadwiger bounds")
    p.add_argument("shape")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("validate", help="check a translate family")
    p.add_argument("shape")
    p.add_argument("vectors", help="inline JSON or a family file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", help="search for a large touching family")
    p.add_argument("shape")
    p.add_argument("--samples", type=int, default=16)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--beam", type=int, default=64)
    p.add_argument("--nodes", type=int, default=200_000)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("audit", help="audit the starlike bound chain on a family")
    p.add_argument("shape")
    p.add_argument("vectors")
    p.add_argument("--center", help="kernel point 'x,y' moved to the origin (default: a kernel point)")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("render", help="draw a family as SVG")
    p.add_argument("shape")
    p.add_argument("vectors")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--allow-invalid", action="store_true")
    p.add_argument("--vectors-arrows", action="store_true", help="draw the translation vectors")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("symmetral", help="difference body and central symmetral of the hull")
    p.add_argument("shape")
    p.set_defaults(func=cmd_symmetral)

    p = sub.add_parser("relnorm", help="relative distance of two points w.r.t. the hull")
    p.add_argument("shape")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_relnorm)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()
    os.environ["KISSLAB_THREADS"] = str(args.threads)
    try:
        return args.func(args)
    except (ParseError, ValidationError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ValidationError) and exc.edges:
            print(f"offending edges: {exc.edges[0]} and {exc.edges[1]}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
