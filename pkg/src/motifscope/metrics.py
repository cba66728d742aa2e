"""Per-snapshot network and node statistics used for sorting and display.

PageRank and degree centrality work on the directed graph; the clustering
coefficient and community detection operate on the undirected projection.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .graphlets import UndirectedGraph, undirect
from .temporal import Snapshot


@dataclass(frozen=True)
class NetworkMetrics:
    node_count: int
    edge_count: int
    avg_clustering: float


@dataclass(frozen=True)
class NodeMetrics:
    """Node statistics aligned with the snapshot's node order."""

    node_ids: tuple[str, ...]
    pagerank: tuple[float, ...]
    degree_centrality: tuple[float, ...]


def network_metrics(g: Snapshot) -> NetworkMetrics:
    u = undirect(g)
    return NetworkMetrics(g.node_count, g.edge_count, average_clustering(u))


def average_clustering(u: UndirectedGraph) -> float:
    """Mean local clustering coefficient; nodes of degree < 2 contribute 0."""
    n = u.node_count
    if n == 0:
        return 0.0
    adjsets = [set(a) for a in u.adj]
    total = 0.0
    for v in range(n):
        nbrs = u.adj[v]
        d = len(nbrs)
        if d < 2:
            continue
        links = sum(
            1
            for i in range(d)
            for j in range(i + 1, d)
            if nbrs[j] in adjsets[nbrs[i]]
        )
        total += 2.0 * links / (d * (d - 1))
    return total / n


def pagerank(g: Snapshot, damping: float = 0.85, tol: float = 1e-8,
             max_iter: int = 200) -> np.ndarray:
    """Power-iteration PageRank; dangling mass is spread uniformly.

    Iterates until the L1 step falls below ``tol`` or ``max_iter`` rounds.
    The result sums to 1 and every entry is positive for damping < 1.
    """
    n = g.node_count
    if n == 0:
        return np.zeros(0, dtype=np.float64)
    idx = {v: i for i, v in enumerate(g.nodes)}
    src = np.array([idx[a] for a, _ in g.edges], dtype=np.int64)
    dst = np.array([idx[b] for _, b in g.edges], dtype=np.int64)
    out_deg = np.zeros(n, dtype=np.float64)
    np.add.at(out_deg, src, 1.0)
    dangling = out_deg == 0
    x = np.full(n, 1.0 / n, dtype=np.float64)
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        contrib = np.zeros(n, dtype=np.float64)
        if len(src):
            np.add.at(contrib, dst, x[src] / out_deg[src])
        x_new = base + damping * (contrib + x[dangling].sum() / n)
        if np.abs(x_new - x).sum() < tol:
            x = x_new
            break
        x = x_new
    return x


def node_metrics(g: Snapshot, damping: float = 0.85) -> NodeMetrics:
    n = g.node_count
    pr = pagerank(g, damping)
    degree = np.zeros(n, dtype=np.float64)
    if n > 1:
        idx = {v: i for i, v in enumerate(g.nodes)}
        for a, b in g.edges:
            degree[idx[a]] += 1.0
            degree[idx[b]] += 1.0
        degree /= 2.0 * (n - 1)
    return NodeMetrics(g.nodes, tuple(float(v) for v in pr), tuple(float(v) for v in degree))


@dataclass(frozen=True)
class CommunityPartition:
    """Community index per node plus the modularity of the partition."""

    node_ids: tuple[str, ...]
    assignment: tuple[int, ...]
    modularity: float


def modularity(u: UndirectedGraph, labels: list[int]) -> float:
    m = u.edge_count
    if m == 0:
        return 0.0
    intra: dict[int, int] = {}
    deg_sum: dict[int, float] = {}
    for v in range(u.node_count):
        deg_sum[labels[v]] = deg_sum.get(labels[v], 0.0) + u.degree(v)
        for w in u.adj[v]:
            if w > v and labels[w] == labels[v]:
                intra[labels[v]] = intra.get(labels[v], 0) + 1
    two_m = 2.0 * m
    return sum(
        intra.get(c, 0) / m - (deg_sum[c] / two_m) ** 2 for c in deg_sum
    )


def communities(g: Snapshot | UndirectedGraph) -> CommunityPartition:
    """Greedy agglomerative modularity maximization.

    Starts from singletons and repeatedly merges the community pair with the
    largest positive modularity gain; equal gains break toward the smallest
    community-id pair. Edgeless graphs stay singletons with modularity 0.
    """
    u = g if isinstance(g, UndirectedGraph) else undirect(g)
    n = u.node_count
    m = u.edge_count
    if m == 0 or n == 0:
        return CommunityPartition(u.nodes, tuple(range(n)), 0.0)

    two_m = 2.0 * m
    deg_sum = {v: float(u.degree(v)) for v in range(n)}
    # between[a][b] = number of edges between communities a and b
    between: dict[int, dict[int, int]] = {v: {} for v in range(n)}
    for v in range(n):
        for w in u.adj[v]:
            if w > v:
                between[v][w] = between[v].get(w, 0) + 1
                between[w][v] = between[w].get(v, 0) + 1
    version = [0] * n
    alive = set(range(n))

    def gain(a: int, b: int) -> float:
        return between[a][b] / m - 2.0 * deg_sum[a] * deg_sum[b] / (two_m * two_m)

    heap: list[tuple[float, int, int, int, int]] = []
    for a in alive:
        for b in between[a]:
            if b > a:
                heapq.heappush(heap, (-gain(a, b), a, b, 0, 0))

    parent = list(range(n))
    while heap:
        neg, a, b, va, vb = heapq.heappop(heap)
        if -neg <= 0.0:
            break
        if a not in alive or b not in alive or version[a] != va or version[b] != vb:
            continue
        # merge b into a (a < b by construction)
        parent[b] = a
        alive.discard(b)
        deg_sum[a] += deg_sum[b]
        version[a] += 1
        nbrs = set(between[a]) | set(between[b])
        nbrs.discard(a)
        nbrs.discard(b)
        merged: dict[int, int] = {}
        for x in nbrs:
            merged[x] = between[a].get(x, 0) + between[b].get(x, 0)
            between[x].pop(a, None)
            between[x].pop(b, None)
            between[x][a] = merged[x]
        between[a] = merged
        between.pop(b, None)
        for x in merged:
            lo, hi = (a, x) if a < x else (x, a)
            heapq.heappush(heap, (-gain(lo, hi), lo, hi, version[lo], version[hi]))

    def root(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    roots = sorted({root(v) for v in range(n)})
    renumber = {r: i for i, r in enumerate(roots)}
    labels = [renumber[root(v)] for v in range(n)]
    return CommunityPartition(u.nodes, tuple(labels), modularity(u, labels))
