"""Row/column reordering, superfamily clustering, and cluster collapsing.

Everything here permutes *display order* only; matrix values are never
touched. Column vectors (one per snapshot, or one per node) are compared by
cosine distance, optionally masked by a temporal filter, grouped by density
clustering, and ordered by one of the named strategies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

import numpy as np

from .density import cluster_labels

INFINITE_DISTANCE = np.inf  # sentinel written by temporal_filter

ROW_STATISTICS = ("mean", "min", "max", "variance", "std", "median")
COLUMN_STRATEGIES = ("byTime", "byClusterThenTime", "byNetworkMetric", "byNodeMetric")


@dataclass(frozen=True)
class DistanceMatrix:
    values: np.ndarray  # (k, k) symmetric, zero diagonal, entries >= 0 or inf
    metric: str = "cosine-distance"

    @property
    def size(self) -> int:
        return self.values.shape[0]


def cosine_distance_matrix(columns: np.ndarray) -> DistanceMatrix:
    """Pairwise 1 - cosine over the columns of a (dim, k) matrix.

    Zero vectors compare as identical to each other (distance 0) and as
    maximally different (1) to anything else.
    """
    v = np.asarray(columns, dtype=np.float64)
    if v.ndim != 2:
        raise ValueError("columns must form a 2-d array of equal-length vectors")
    norms = np.linalg.norm(v, axis=0)
    zero = norms == 0.0
    safe = np.where(zero, 1.0, norms)
    unit = v / safe
    cos = unit.T @ unit
    d = 1.0 - cos
    d[zero, :] = 1.0
    d[:, zero] = 1.0
    d[np.ix_(zero, zero)] = 0.0
    d = np.maximum((d + d.T) / 2.0, 0.0)
    np.fill_diagonal(d, 0.0)
    return DistanceMatrix(d)


def temporal_filter(d: DistanceMatrix, times: tuple[int, ...] | np.ndarray,
                    eps_time: int) -> DistanceMatrix:
    """Set pairs further apart than ``eps_time`` (exclusive) to infinity."""
    if eps_time < 0:
        raise ValueError("eps_time must be >= 0")
    t = np.asarray(times, dtype=np.int64)
    if t.shape[0] != d.size:
        raise ValueError("times length must match matrix size")
    far = np.abs(t[:, None] - t[None, :]) > eps_time
    np.fill_diagonal(far, False)
    values = np.where(far, INFINITE_DISTANCE, d.values)
    return DistanceMatrix(values, d.metric)


@dataclass(frozen=True)
class ClusterAssignment:
    """Cluster label per column; -1 is noise. ``cluster_order`` lists cluster
    ids in display order (earliest member first)."""

    labels: tuple[int, ...]
    cluster_order: tuple[int, ...]
    parameters: dict = field(default_factory=dict)


def cluster_density(d: DistanceMatrix, min_cluster_size: int = 5,
                    times: tuple[int, ...] | None = None,
                    eps_time: int | None = None) -> ClusterAssignment:
    """Density clustering of the columns behind ``d``.

    Cluster ids are renumbered so that id order equals display order: the
    cluster whose earliest member comes first gets id 0.
    """
    raw = cluster_labels(d.values, min_cluster_size)
    k = len(raw)
    order_times = np.asarray(times if times is not None else range(k), dtype=np.int64)
    firsts: dict[int, int] = {}
    for i in range(k):
        lab = int(raw[i])
        if lab != -1 and lab not in firsts:
            firsts[lab] = i
    by_time = sorted(firsts, key=lambda lab: (int(order_times[firsts[lab]]), firsts[lab]))
    renumber = {lab: rank for rank, lab in enumerate(by_time)}
    labels = tuple(renumber.get(int(x), -1) for x in raw)
    params = {"minClusterSize": min_cluster_size}
    if eps_time is not None:
        params["epsTime"] = eps_time
    return ClusterAssignment(labels, tuple(range(len(by_time))), params)


@dataclass(frozen=True)
class ViewState:
    """Display permutations plus optional clustering for one matrix view."""

    row_permutation: tuple[int, ...]
    col_permutation: tuple[int, ...]
    clusters: ClusterAssignment | None = None
    collapsed: frozenset[int] = frozenset()

    @staticmethod
    def identity(rows: int, cols: int) -> "ViewState":
        return ViewState(tuple(range(rows)), tuple(range(cols)))

    def to_dict(self) -> dict:
        clusters = None
        if self.clusters is not None:
            clusters = {
                "labels": list(self.clusters.labels),
                "clusterOrder": list(self.clusters.cluster_order),
                "parameters": dict(self.clusters.parameters),
            }
        return {
            "rowPermutation": list(self.row_permutation),
            "colPermutation": list(self.col_permutation),
            "clusters": clusters,
            "collapsed": sorted(self.collapsed),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @staticmethod
    def from_dict(obj: dict) -> "ViewState":
        clusters = None
        if obj.get("clusters") is not None:
            c = obj["clusters"]
            clusters = ClusterAssignment(
                tuple(int(x) for x in c["labels"]),
                tuple(int(x) for x in c["clusterOrder"]),
                dict(c.get("parameters", {})),
            )
        return ViewState(
            tuple(int(x) for x in obj["rowPermutation"]),
            tuple(int(x) for x in obj["colPermutation"]),
            clusters,
            frozenset(int(x) for x in obj.get("collapsed", ())),
        )


def order_columns(state: ViewState, strategy: str, *,
                  times: tuple[int, ...] | None = None,
                  metric_values: np.ndarray | None = None) -> ViewState:
    """New view with columns permuted by the named strategy.

    byTime needs ``times``; byNetworkMetric/byNodeMetric need
    ``metric_values`` (sorted ascending, ties stable by original index);
    byClusterThenTime needs ``state.clusters`` and places noise last.
    """
    k = len(state.col_permutation)
    if strategy == "byTime":
        if times is None:
            raise ValueError("byTime requires times")
        perm = sorted(range(k), key=lambda i: (times[i], i))
    elif strategy in ("byNetworkMetric", "byNodeMetric"):
        if metric_values is None:
            raise ValueError(f"{strategy} requires metric values")
        vals = np.asarray(metric_values, dtype=np.float64)
        if len(vals) != k:
            raise ValueError("metric values length mismatch")
        perm = sorted(range(k), key=lambda i: (vals[i], i))
    elif strategy == "byClusterThenTime":
        if state.clusters is None:
            raise ValueError("byClusterThenTime requires a clustered view")
        t = times if times is not None else tuple(range(k))
        labels = state.clusters.labels
        group_rank = {lab: r for r, lab in enumerate(state.clusters.cluster_order)}
        noise_rank = len(group_rank)
        perm = sorted(
            range(k), key=lambda i: (group_rank.get(labels[i], noise_rank), t[i], i)
        )
    else:
        raise ValueError(f"unknown column strategy: {strategy}")
    return replace(state, col_permutation=tuple(perm))


def order_rows(state: ViewState, matrix_values: np.ndarray, statistic: str) -> ViewState:
    """New view with rows sorted descending by a per-row statistic."""
    if statistic not in ROW_STATISTICS:
        raise ValueError(f"unknown row statistic: {statistic}")
    v = np.asarray(matrix_values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("matrix is empty")
    fn = {
        "mean": np.mean,
        "min": np.min,
        "max": np.max,
        "variance": np.var,
        "std": np.std,
        "median": np.median,
    }[statistic]
    stats = fn(v, axis=1)
    perm = sorted(range(v.shape[0]), key=lambda i: (-stats[i], i))
    return replace(state, row_permutation=tuple(perm))


@dataclass(frozen=True)
class CollapsedLayout:
    """Which member columns of a collapsed cluster stay visible."""

    cluster_id: int
    visible: tuple[int, ...]  # column indices in display order
    hidden_count: int


def collapse(state: ViewState, cluster_id: int) -> CollapsedLayout:
    """First three and last three members (display order) of a cluster; the
    slot between them stands for the rest. At most six members means nothing
    to hide."""
    if state.clusters is None or cluster_id not in state.clusters.cluster_order:
        raise ValueError(f"unknown cluster id: {cluster_id}")
    labels = state.clusters.labels
    members = [c for c in state.col_permutation if labels[c] == cluster_id]
    if len(members) <= 6:
        return CollapsedLayout(cluster_id, tuple(members), 0)
    return CollapsedLayout(
        cluster_id, tuple(members[:3] + members[-3:]), len(members) - 6
    )
