"""HTTP/JSON API over a populated analysis cache.

All endpoints are read-only with respect to raw data; POSTs compute view
states and are idempotent. Long computations (big snapshots) are handed to a
bounded worker pool and answered with 202 plus a job id to poll.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager
from dataclasses import replace
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .cache import AnalysisCache, CacheMismatchError
from .census import TRIAD_LABELS, triad_instances
from .graphlets import compute_gdv
from .layout import force_layout
from .metrics import communities, network_metrics, node_metrics
from .reorder import (
    ROW_STATISTICS,
    ViewState,
    cluster_density,
    cosine_distance_matrix,
    order_columns,
    order_rows,
    temporal_filter,
)
from .temporal import DynamicNetwork, Snapshot, supergraph

COMMUNITY_NODE_THRESHOLD = 100  # communities only for graphs larger than this
INSTANCE_NODE_LIMIT = 1000  # motif instance enumeration refused above this

NETWORK_METRIC_NAMES = ("edgeCount", "avgClustering", "nodeCount")
NODE_METRIC_NAMES = ("pagerank", "degreeCentrality")


class ApiError(Exception):
    def __init__(self, status: int, error: str, detail: str):
        self.status = status
        self.error = error
        self.detail = detail


class CensusViewRequest(BaseModel):
    strategy: str = "byClusterThenTime"
    statistic: str | None = None
    epsTime: int = 10
    minClusterSize: int = 5
    metric: str | None = None


class GdvViewRequest(BaseModel):
    strategy: str = "byClusterThenTime"
    statistic: str | None = None
    minClusterSize: int = 5
    metric: str = "pagerank"


class _State:
    """Caches parsed artifacts in memory; disk stays the source of truth."""

    def __init__(self, root: Path, job_threshold: int, workers: int):
        self.root = root
        self.job_threshold = job_threshold
        self.lock = threading.Lock()
        self.networks: dict[str, DynamicNetwork] = {}
        self.jobs: dict[str, dict] = {}
        self.pool = ThreadPoolExecutor(max_workers=workers)

    def cache(self, dataset_id: str) -> AnalysisCache:
        try:
            return AnalysisCache.open(self.root, dataset_id)
        except FileNotFoundError:
            raise ApiError(404, "unknown dataset", f"no dataset {dataset_id!r}")

    def network(self, dataset_id: str) -> DynamicNetwork:
        with self.lock:
            net = self.networks.get(dataset_id)
        if net is None:
            net = self.cache(dataset_id).read_network()
            with self.lock:
                self.networks[dataset_id] = net
        return net

    def snapshot(self, dataset_id: str, t: int) -> Snapshot:
        net = self.network(dataset_id)
        if not 0 <= t < len(net):
            raise ApiError(404, "unknown snapshot", f"snapshot {t} not in 0..{len(net) - 1}")
        return net.snapshots[t]

    def submit(self, key: str, fn) -> dict:
        """Run fn under a job key, deduplicating concurrent requests."""
        with self.lock:
            job = self.jobs.get(key)
            if job is not None and job["status"] in ("running", "done"):
                return {"job": key, "status": job["status"]}
            self.jobs[key] = {"status": "running", "result": None, "detail": None}

        def run():
            try:
                result = fn()
                with self.lock:
                    self.jobs[key] = {"status": "done", "result": result, "detail": None}
            except Exception as exc:  # stored, surfaced on poll
                with self.lock:
                    self.jobs[key] = {"status": "error", "result": None, "detail": str(exc)}

        self.pool.submit(run)
        return {"job": key, "status": "running"}


def _json_error(status: int, error: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": error, "detail": detail})


def _network_metric_values(state: _State, dataset_id: str, metric: str) -> np.ndarray:
    cache = state.cache(dataset_id)
    try:
        per_snapshot = cache.read_metrics()
    except FileNotFoundError:
        net = state.network(dataset_id)
        per_snapshot = [network_metrics(g) for g in net.snapshots]
        cache.write_metrics(per_snapshot)
    key = {
        "edgeCount": lambda m: m.edge_count,
        "avgClustering": lambda m: m.avg_clustering,
        "nodeCount": lambda m: m.node_count,
    }[metric]
    return np.array([key(m) for m in per_snapshot], dtype=np.float64)


def _gdv_body(state: _State, dataset_id: str, t: int, max_size: int):
    """GDV artifact as a JSON-ready dict, or a job ticket for big snapshots."""
    cache = state.cache(dataset_id)
    name = cache.gdv_name(t, max_size)
    if cache.has_artifact(name):
        return cache.read_artifact(name), False
    snap = state.snapshot(dataset_id, t)

    def compute() -> dict:
        matrix = compute_gdv(snap, max_size)
        cache.write_gdv(t, matrix)
        return cache.read_artifact(name)

    if snap.node_count > state.job_threshold:
        return state.submit(f"gdv:{dataset_id}:{t}:{max_size}", compute), True
    return compute(), False


def _layout_positions(state: _State, dataset_id: str):
    cache = state.cache(dataset_id)
    if cache.has_artifact("layout.json"):
        return cache.read_layout(), False
    net = state.network(dataset_id)
    sg = supergraph(net)

    def compute() -> dict:
        positions = force_layout(sg, iterations=500, seed=cache.manifest.seed)
        cache.write_layout(positions, 500, cache.manifest.seed)
        return {"status": "layout ready"}

    if sg.node_count > state.job_threshold:
        return state.submit(f"layout:{dataset_id}", compute), True
    compute()
    return cache.read_layout(), False


def create_app(cache_root: str | Path, *, job_threshold: int = 2000,
               workers: int = 2) -> FastAPI:
    state = _State(Path(cache_root), job_threshold, workers)

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        yield
        state.pool.shutdown(wait=False, cancel_futures=True)

    app = FastAPI(title="motifscope", docs_url=None, redoc_url=None, lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.analysis = state

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return _json_error(exc.status, exc.error, exc.detail)

    @app.exception_handler(CacheMismatchError)
    async def _mismatch(_req: Request, exc: CacheMismatchError):
        return _json_error(409, "cache mismatch", str(exc))

    @app.exception_handler(FileNotFoundError)
    async def _missing(_req: Request, exc: FileNotFoundError):
        return _json_error(404, "not found", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _invalid(_req: Request, exc: RequestValidationError):
        return _json_error(400, "invalid parameters", str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(_req: Request, exc: StarletteHTTPException):
        return _json_error(exc.status_code, "error", str(exc.detail))

    @app.get("/api/datasets")
    def list_datasets():
        return [m.to_dict() for m in AnalysisCache.list_datasets(state.root)]

    @app.get("/api/datasets/{dataset_id}/census")
    def get_census(dataset_id: str):
        return state.cache(dataset_id).read_artifact("census.json")

    @app.post("/api/datasets/{dataset_id}/census/view")
    def census_view(dataset_id: str, req: CensusViewRequest):
        if req.epsTime < 0:
            raise ApiError(400, "invalid parameters", "epsTime must be >= 0")
        if req.minClusterSize < 2:
            raise ApiError(400, "invalid parameters", "minClusterSize must be >= 2")
        if req.statistic is not None and req.statistic not in ROW_STATISTICS:
            raise ApiError(400, "invalid parameters", f"unknown statistic {req.statistic!r}")
        matrix = state.cache(dataset_id).read_census()
        view = ViewState.identity(*matrix.values.shape)
        if req.strategy == "byTime":
            view = order_columns(view, "byTime", times=matrix.times)
        elif req.strategy == "byClusterThenTime":
            d = temporal_filter(
                cosine_distance_matrix(matrix.values), matrix.times, req.epsTime
            )
            assignment = cluster_density(
                d, req.minClusterSize, times=matrix.times, eps_time=req.epsTime
            )
            view = replace(view, clusters=assignment)
            view = order_columns(view, "byClusterThenTime", times=matrix.times)
        elif req.strategy == "byNetworkMetric":
            metric = req.metric or "edgeCount"
            if metric not in NETWORK_METRIC_NAMES:
                raise ApiError(400, "invalid parameters", f"unknown metric {metric!r}")
            values = _network_metric_values(state, dataset_id, metric)
            view = order_columns(view, "byNetworkMetric", metric_values=values)
        else:
            raise ApiError(400, "invalid parameters", f"unknown strategy {req.strategy!r}")
        if req.statistic is not None:
            view = order_rows(view, matrix.values, req.statistic)
        return view.to_dict()

    @app.get("/api/datasets/{dataset_id}/snapshots/{t}/gdv")
    def get_gdv(dataset_id: str, t: int, maxSize: int = 4):
        if maxSize not in (4, 5):
            raise ApiError(400, "invalid parameters", "maxSize must be 4 or 5")
        body, is_job = _gdv_body(state, dataset_id, t, maxSize)
        if is_job:
            return JSONResponse(status_code=202, content=body)
        return body

    @app.post("/api/datasets/{dataset_id}/snapshots/{t}/gdv/view")
    def gdv_view(dataset_id: str, t: int, req: GdvViewRequest, maxSize: int = 4):
        if maxSize not in (4, 5):
            raise ApiError(400, "invalid parameters", "maxSize must be 4 or 5")
        if req.minClusterSize < 2:
            raise ApiError(400, "invalid parameters", "minClusterSize must be >= 2")
        if req.statistic is not None and req.statistic not in ROW_STATISTICS:
            raise ApiError(400, "invalid parameters", f"unknown statistic {req.statistic!r}")
        body, is_job = _gdv_body(state, dataset_id, t, maxSize)
        if is_job:
            return JSONResponse(status_code=202, content=body)
        values = np.asarray(body["values"], dtype=np.float64).reshape(
            len(body["orbits"]), len(body["nodes"])
        )
        view = ViewState.identity(*values.shape)
        if req.strategy == "byClusterThenTime":
            assignment = cluster_density(cosine_distance_matrix(values), req.minClusterSize)
            view = replace(view, clusters=assignment)
            view = order_columns(view, "byClusterThenTime")
        elif req.strategy == "byNodeMetric":
            if req.metric not in NODE_METRIC_NAMES:
                raise ApiError(400, "invalid parameters", f"unknown metric {req.metric!r}")
            snap = state.snapshot(dataset_id, t)
            nm = node_metrics(snap)
            vals = nm.pagerank if req.metric == "pagerank" else nm.degree_centrality
            view = order_columns(view, "byNodeMetric", metric_values=np.asarray(vals))
        else:
            raise ApiError(400, "invalid parameters", f"unknown strategy {req.strategy!r}")
        if req.statistic is not None:
            view = order_rows(view, values, req.statistic)
        return view.to_dict()

    @app.get("/api/datasets/{dataset_id}/snapshots/{t}/graph")
    def get_graph(dataset_id: str, t: int):
        snap = state.snapshot(dataset_id, t)
        positions, is_job = _layout_positions(state, dataset_id)
        if is_job:
            return JSONResponse(status_code=202, content=positions)
        nm = node_metrics(snap)
        nodes = [
            {
                "id": v,
                "pagerank": nm.pagerank[i],
                "degreeCentrality": nm.degree_centrality[i],
            }
            for i, v in enumerate(snap.nodes)
        ]
        body = {
            "snapshot": t,
            "interval": list(snap.interval),
            "nodes": nodes,
            "edges": sorted(list(e) for e in snap.edges),
            "layout": {v: list(positions[v]) for v in snap.nodes if v in positions},
        }
        if snap.node_count > COMMUNITY_NODE_THRESHOLD:
            partition = communities(snap)
            for i, node in enumerate(nodes):
                node["community"] = partition.assignment[i]
            body["communities"] = {
                "count": len(set(partition.assignment)),
                "modularity": partition.modularity,
            }
        return body

    @app.get("/api/datasets/{dataset_id}/snapshots/{t}/metrics")
    def get_metrics(dataset_id: str, t: int):
        snap = state.snapshot(dataset_id, t)
        m = network_metrics(snap)
        return {
            "snapshot": t,
            "nodeCount": m.node_count,
            "edgeCount": m.edge_count,
            "avgClustering": m.avg_clustering,
        }

    @app.get("/api/datasets/{dataset_id}/snapshots/{t}/motifs/{label}/nodes")
    def get_motif_nodes(dataset_id: str, t: int, label: str):
        if label not in TRIAD_LABELS:
            raise ApiError(404, "unknown motif", f"no triad class {label!r}")
        snap = state.snapshot(dataset_id, t)
        if snap.node_count > INSTANCE_NODE_LIMIT:
            return {
                "label": label,
                "available": False,
                "nodes": [],
                "instanceCount": 0,
                "detail": f"instance enumeration disabled above {INSTANCE_NODE_LIMIT} nodes",
            }
        instances = triad_instances(snap, TRIAD_LABELS.index(label) + 1)
        nodes = sorted({v for tri in instances for v in tri})
        return {
            "label": label,
            "available": True,
            "nodes": nodes,
            "instanceCount": len(instances),
        }

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        with state.lock:
            job = state.jobs.get(job_id)
        if job is None:
            raise ApiError(404, "unknown job", f"no job {job_id!r}")
        body = {"job": job_id, "status": job["status"]}
        if job["status"] == "done" and isinstance(job["result"], dict):
            body["result"] = job["result"]
        if job["status"] == "error":
            body["detail"] = job["detail"]
        return body

    return app
