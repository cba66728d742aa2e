"""Command-line pipeline: ingest -> census -> render/serve.

The cache root comes from --cache, falling back to the MOTIFSCOPE_CACHE
environment variable, then ./cache.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace as dc_replace
from pathlib import Path

import numpy as np

from .cache import AnalysisCache, Manifest
from .census import TRIAD_LABELS, build_census_matrix
from .graphlets import compute_gdv
from .metrics import network_metrics
from .render import (
    build_view_model,
    diverging_scale,
    export_png,
    export_svg,
    grayscale_scale,
)
from .reorder import (
    ROW_STATISTICS,
    ViewState,
    cluster_density,
    cosine_distance_matrix,
    order_columns,
    order_rows,
    temporal_filter,
)
from .temporal import EdgeListFormat, discretize, ingest


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text!r}")
    return value


def _cache_root(arg: str | None) -> Path:
    return Path(arg or os.environ.get("MOTIFSCOPE_CACHE", "cache"))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motifscope",
        description="Motif significance profiles and graphlet degree vectors "
        "for dynamic networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="discretize a timestamped edge list")
    p_ingest.add_argument("edges", help="delimited edge list file")
    p_ingest.add_argument("--bin", type=_positive_int, default=86400,
                          help="bin width in seconds (default 86400)")
    p_ingest.add_argument("--delimiter", default=",")
    p_ingest.add_argument("--id", dest="dataset_id", default=None,
                          help="dataset id (default: file stem)")
    p_ingest.add_argument("--source-col", type=int, default=0)
    p_ingest.add_argument("--target-col", type=int, default=1)
    p_ingest.add_argument("--time-col", type=int, default=2)
    p_ingest.add_argument("--header", choices=("auto", "yes", "no"), default="auto")
    p_ingest.add_argument("--cache", default=None, help="cache root directory")

    p_census = sub.add_parser("census", help="significance profiles for all snapshots")
    p_census.add_argument("--dataset", required=True)
    p_census.add_argument("--nulls", type=_positive_int, default=100)
    p_census.add_argument("--seed", type=int, default=0)
    p_census.add_argument("--workers", type=int, default=0,
                          help="parallel processes (0 = auto)")
    p_census.add_argument("--cache", default=None)

    p_render = sub.add_parser("render", help="export a pixel view as SVG/PNG")
    p_render.add_argument("--dataset", required=True)
    p_render.add_argument("--view", choices=("census", "gdv"), default="census")
    p_render.add_argument("--t", type=int, default=None, help="snapshot index (gdv view)")
    p_render.add_argument("--max-size", type=int, choices=(4, 5), default=None)
    p_render.add_argument("--svg", required=True, help="output SVG path")
    p_render.add_argument("--png", default=None, help="optional PNG output path")
    p_render.add_argument("--sort-rows", choices=ROW_STATISTICS, default=None)
    p_render.add_argument("--sort-cols",
                          choices=("time", "edgeCount", "avgClustering"), default=None)
    p_render.add_argument("--cluster", action="store_true",
                          help="cluster columns into superfamilies")
    p_render.add_argument("--collapse", action="store_true",
                          help="collapse every cluster with more than 6 members")
    p_render.add_argument("--eps-time", type=int, default=10)
    p_render.add_argument("--min-cluster-size", type=int, default=5)
    p_render.add_argument("--normalize", choices=("per-row", "global", "none"),
                          default="per-row", help="gdv value normalization")
    p_render.add_argument("--cell-size", type=_positive_int, default=12)
    p_render.add_argument("--cache", default=None)

    p_serve = sub.add_parser("serve", help="serve the HTTP/JSON API")
    p_serve.add_argument("--port", type=_positive_int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--cache", default=None)
    return parser


def _cmd_ingest(args) -> int:
    fmt = EdgeListFormat(
        delimiter=args.delimiter,
        source_col=args.source_col,
        target_col=args.target_col,
        time_col=args.time_col,
        header={"auto": "auto", "yes": True, "no": False}[args.header],
    )
    edge_list = ingest(args.edges, fmt)
    dataset_id = args.dataset_id or Path(args.edges).stem
    network = discretize(edge_list, args.bin, dataset_id)
    manifest = Manifest(
        dataset_id=dataset_id,
        source=str(args.edges),
        delimiter=args.delimiter,
        bin_width=args.bin,
    )
    cache = AnalysisCache(_cache_root(args.cache), manifest)
    cache.write_manifest()
    cache.write_network(network)
    nodes = network.node_universe()
    edges_total = sum(s.edge_count for s in network.snapshots)
    print(
        f"{len(network)} snapshots, {len(nodes)} nodes, {edges_total} edges "
        f"({edge_list.malformed_rows} malformed rows skipped)"
    )
    print(f"cache: {cache.dir}")
    return 0


def _cmd_census(args) -> int:
    root = _cache_root(args.cache)
    cache = AnalysisCache.open(root, args.dataset)
    network = cache.read_network()
    if (cache.manifest.null_count, cache.manifest.seed) != (args.nulls, args.seed):
        cache = AnalysisCache(
            root, dc_replace(cache.manifest, null_count=args.nulls, seed=args.seed)
        )
        cache.write_manifest()
        cache.write_network(network)  # re-stamp under the new manifest
    workers = args.workers if args.workers > 0 else min(4, os.cpu_count() or 1)
    matrix = build_census_matrix(network, args.nulls, args.seed, workers=workers)
    cache.write_census(matrix)
    cache.write_metrics([network_metrics(g) for g in network.snapshots])
    print(
        f"census: {matrix.values.shape[0]}x{matrix.values.shape[1]} profile matrix, "
        f"nulls={args.nulls}, seed={args.seed}"
    )
    return 0


def _census_view(args, cache: AnalysisCache):
    matrix = cache.read_census()
    view = ViewState.identity(*matrix.values.shape)
    if args.cluster:
        d = temporal_filter(cosine_distance_matrix(matrix.values), matrix.times, args.eps_time)
        assignment = cluster_density(
            d, args.min_cluster_size, times=matrix.times, eps_time=args.eps_time
        )
        view = dc_replace(view, clusters=assignment)
        view = order_columns(view, "byClusterThenTime", times=matrix.times)
        if args.collapse:
            big = {
                cid
                for cid in assignment.cluster_order
                if assignment.labels.count(cid) > 6
            }
            view = dc_replace(view, collapsed=frozenset(big))
    elif args.sort_cols in ("edgeCount", "avgClustering"):
        per_snapshot = cache.read_metrics()
        values = [
            m.edge_count if args.sort_cols == "edgeCount" else m.avg_clustering
            for m in per_snapshot
        ]
        view = order_columns(view, "byNetworkMetric", metric_values=np.asarray(values))
    else:
        view = order_columns(view, "byTime", times=matrix.times)
    if args.sort_rows:
        view = order_rows(view, matrix.values, args.sort_rows)
    labels = tuple(str(t) for t in matrix.times)
    return matrix.values, view, diverging_scale(), TRIAD_LABELS, labels, None


def _gdv_view(args, cache: AnalysisCache):
    if args.t is None:
        raise ValueError("--t is required for the gdv view")
    max_size = args.max_size or cache.manifest.max_graphlet_size
    try:
        matrix = cache.read_gdv(args.t, max_size)
    except FileNotFoundError:
        network = cache.read_network()
        if not 0 <= args.t < len(network):
            raise ValueError(f"snapshot {args.t} not in 0..{len(network) - 1}")
        matrix = compute_gdv(network.snapshots[args.t], max_size)
        cache.write_gdv(args.t, matrix)
    view = ViewState.identity(*matrix.values.shape)
    if args.cluster:
        assignment = cluster_density(
            cosine_distance_matrix(matrix.values.astype(np.float64)),
            args.min_cluster_size,
        )
        view = dc_replace(view, clusters=assignment)
        view = order_columns(view, "byClusterThenTime")
    if args.sort_rows:
        view = order_rows(view, matrix.values, args.sort_rows)
    normalize = None if args.normalize == "none" else args.normalize
    row_labels = tuple(str(o) for o in matrix.orbits)
    return (
        matrix.values, view, grayscale_scale((0.0, 1.0)), row_labels,
        matrix.node_ids, normalize,
    )


def _cmd_render(args) -> int:
    cache = AnalysisCache.open(_cache_root(args.cache), args.dataset)
    if args.view == "census":
        values, view, scale, row_labels, col_labels, normalize = _census_view(args, cache)
    else:
        values, view, scale, row_labels, col_labels, normalize = _gdv_view(args, cache)
    model = build_view_model(
        values, view, scale, args.cell_size,
        row_labels=row_labels, col_labels=col_labels, normalize=normalize,
    )
    export_svg(model, args.svg)
    print(f"wrote {args.svg}")
    if args.png:
        export_png(model, args.png)
        print(f"wrote {args.png}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(_cache_root(args.cache))
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "ingest": _cmd_ingest,
        "census": _cmd_census,
        "render": _cmd_render,
        "serve": _cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
