"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 graph has no lattice
embedding (not a partial cube), 3 supplied embedding is not isometric.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

import numpy as np

from . import bench, generators
from .embed import LatticeEmbedding, certify_isometry, embed, verify_isometry
from .errors import (
    DimensionTooHigh,
    GraphFormatError,
    IsometryViolation,
    LatticeError,
    Rejected,
    TooLarge,
)
from .graph import (
    DEFAULT_MAX_N,
    Graph,
    all_pairs_distances,
    parse_edge_list,
    render_edge_list,
    validate,
)
from .render import render_svg
from .semicube import export_dot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_NOT_ISOMETRIC = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which this CLI reserves for rejected graphs
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail(exc: BaseException) -> None:
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = parse_edge_list(text)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return g


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from exc


def format_embedding(result, fmt: str = "text") -> str:
    emb = result.embedding
    if fmt == "json":
        doc = {
            "n": result.graph.n,
            "m": result.graph.m,
            "tau": result.tau,
            "matching_size": result.matching_size,
            "dimension": result.d,
            "coordinates": emb.coords.tolist(),
        }
        return json.dumps(doc) + "\n"
    lines = [
        f"# n={result.graph.n} m={result.graph.m} tau={result.tau} "
        f"matching_size={result.matching_size} dimension={result.d}"
    ]
    for v in range(emb.n):
        lines.append(" ".join(str(x) for x in (v, *emb.point(v))))
    return "\n".join(lines) + "\n"


def parse_embedding(text: str, n: int) -> LatticeEmbedding:
    """Read ``vertex_id c_0 ... c_{d-1}`` lines; every vertex exactly once."""
    rows: dict[int, list[int]] = {}
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            v, *coords = (int(t) for t in line.split())
        except ValueError:
            raise UsageError(f"embedding line {lineno}: expected integers, got {raw!r}") from None
        if width is None:
            width = len(coords)
        elif len(coords) != width:
            raise UsageError(f"embedding line {lineno}: {len(coords)} coordinates, expected {width}")
        if v in rows:
            raise UsageError(f"embedding line {lineno}: vertex {v} listed twice")
        rows[v] = coords
    if sorted(rows) != list(range(n)):
        missing = sorted(set(range(n)) - set(rows))
        extra = sorted(set(rows) - set(range(n)))
        raise UsageError(f"embedding vertices do not match graph: missing {missing[:5]}, extra {extra[:5]}")
    coords = np.array([rows[v] for v in range(n)], dtype=np.int64).reshape(n, width or 0)
    return LatticeEmbedding(coords)


def cmd_embed(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    dm = all_pairs_distances(g, max_n=args.max_n) if args.all_pairs else None
    result = embed(g, dm)
    _write(format_embedding(result, args.format), args.out)
    if args.sc_dot:
        _write(export_dot(result.semicube_graph), args.sc_dot)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    result = embed(g)
    _write(render_svg(g, result.embedding, project=args.project, scale=args.scale), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _read_graph(args.graph)
    try:
        text = Path(args.embedding).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.embedding}: {exc.strerror}") from exc
    emb = parse_embedding(text, g.n)
    validate(g)
    if g.n <= args.max_n:
        verify_isometry(g, all_pairs_distances(g), emb)
    else:
        certify_isometry(g, emb)
    print(f"ok: isometric embedding of {g.n} vertices in dimension {emb.d}")
    return EXIT_OK


def _gen_graph(family: str, params: list[str], seed: int) -> Graph:
    if family == "product":
        if not params:
            raise UsageError("product needs factor specs such as path:3 cycle:4")
        return generators.product(*(generators.from_spec(p) for p in params))
    if family == "random-tree" and len(params) == 1:
        params = [*params, str(seed)]
    return generators.from_spec(":".join([family, *params]))


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = _gen_graph(args.family, args.params, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(render_edge_list(g), args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    bench.warm_up()
    reports = []
    for size in args.sizes:
        try:
            g = bench.bench_graph(args.family, size, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        reports.append(bench.run(g, f"{args.family}-{size}"))
    if args.format == "json":
        _write(json.dumps([r.as_dict() for r in reports], indent=2) + "\n", args.out)
    else:
        _write(bench.format_table(reports), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="latdim", description="Minimum-dimension isometric lattice embeddings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("embed", help="compute lattice dimension and coordinates")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="write coordinates here instead of stdout")
    p.add_argument("--sc-dot", metavar="PATH", help="also write the semicube graph in DOT format")
    p.add_argument("--all-pairs", action="store_true", help="check against a full distance matrix")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="distance-matrix size guard")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("render", help="draw an embedding of dimension <= 3 as SVG")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--out", help="SVG path (default stdout)")
    p.add_argument("--project", action="store_true", help="draw only the first three axes")
    p.add_argument("--scale", type=float, default=40.0)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="check an embedding file against a graph")
    p.add_argument("graph", help="edge-list file")
    p.add_argument("embedding", help="lines of 'vertex_id c_0 ... c_{d-1}'")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="distance-matrix size guard")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="print a generated graph as an edge list")
    p.add_argument("family", help="path, cycle, hypercube, grid, random-tree, star, complete, "
                   "complete-bipartite, petersen or product")
    p.add_argument("params", nargs="*", help="integer parameters, or name:arg factor specs for product")
    p.add_argument("--seed", type=int, default=0, help="random-tree seed when not given positionally")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time pipeline stages over a size sweep")
    p.add_argument("family", help="grid (square side), random-tree, path, cycle, hypercube, star")
    p.add_argument("sizes", nargs="+", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Rejected as exc:
        _fail(exc)
        return EXIT_REJECTED
    except IsometryViolation as exc:
        _fail(exc)
        return EXIT_NOT_ISOMETRIC
    except (UsageError, GraphFormatError, TooLarge, DimensionTooHigh) as exc:
        _fail(exc)
        return EXIT_USAGE
    except LatticeError as exc:
        _fail(exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
