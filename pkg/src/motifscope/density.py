"""Hierarchical density-based clustering over a precomputed distance matrix.

The pipeline is the usual one: mutual-reachability transform (core distance =
k-th smallest row entry with the point itself included, k = min_cluster_size),
minimum spanning tree, single-linkage dendrogram, condensation into clusters
of at least min_cluster_size points, and excess-of-mass cluster selection.
Density is measured as lambda = 1/distance; a zero distance maps to infinite
lambda and the infinity sentinel written by the temporal filter maps to
lambda 0, so filtered pairs behave as never linked.

One deliberate deviation from the textbook selection: the root of the
condensed tree, normally never a valid cluster, is returned as a single
cluster when the tree contains no other cluster at all (and the point count
allows one). Without this, a set of identical points would come back as all
noise, which is useless for grouping indistinguishable snapshots.
"""

from __future__ import annotations

import math

import numpy as np


def _lambda_of(dist: float) -> float:
    if dist == 0.0:
        return math.inf
    if math.isinf(dist):
        return 0.0
    return 1.0 / dist


def _delta(lam: float, birth: float) -> float:
    # a point entering and leaving at the same lambda adds no mass, also
    # when both are infinite
    return 0.0 if lam == birth else lam - birth


def mutual_reachability(dist: np.ndarray, min_cluster_size: int) -> np.ndarray:
    k = dist.shape[0]
    core = np.sort(dist, axis=1)[:, min_cluster_size - 1]
    mr = np.maximum(dist, np.maximum(core[:, None], core[None, :]))
    mr[np.diag_indices(k)] = 0.0
    return mr


def _mst_edges(mr: np.ndarray) -> list[tuple[int, int, float]]:
    """Prim's algorithm; infinite weights are allowed and connect components
    last."""
    n = mr.shape[0]
    in_tree = np.zeros(n, dtype=bool)
    in_tree[0] = True
    key = mr[0].copy()
    parent = np.zeros(n, dtype=np.int64)
    edges: list[tuple[int, int, float]] = []
    for _ in range(n - 1):
        rest = np.flatnonzero(~in_tree)
        v = int(rest[np.argmin(key[rest])])
        in_tree[v] = True
        edges.append((int(parent[v]), v, float(key[v])))
        better = (mr[v] < key) & ~in_tree
        parent[better] = v
        key[better] = mr[v][better]
    return edges


def _single_linkage(n: int, edges: list[tuple[int, int, float]]):
    """Union MST edges by ascending weight into a dendrogram.

    Internal node i (id n+i) merges children at height[i]; leaves are ids
    0..n-1.
    """
    order = sorted(range(len(edges)), key=lambda e: edges[e][2])
    uf = list(range(n))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    dendro_node = list(range(n))
    sizes = {i: 1 for i in range(n)}
    left: list[int] = []
    right: list[int] = []
    height: list[float] = []
    size: list[int] = []
    next_id = n
    for e in order:
        a, b, w = edges[e]
        ra, rb = find(a), find(b)
        left.append(dendro_node[ra])
        right.append(dendro_node[rb])
        height.append(w)
        size.append(sizes[ra] + sizes[rb])
        uf[rb] = ra
        sizes[ra] += sizes[rb]
        dendro_node[ra] = next_id
        next_id += 1
    return left, right, height, size


def cluster_labels(dist: np.ndarray, min_cluster_size: int) -> np.ndarray:
    """Flat cluster labels for a symmetric distance matrix; -1 marks noise.

    Labels are numbered by first occurrence. Deterministic given the input.
    """
    if min_cluster_size < 2:
        raise ValueError("min_cluster_size must be at least 2")
    dist = np.asarray(dist, dtype=np.float64)
    k = dist.shape[0]
    if k < min_cluster_size:
        return np.full(k, -1, dtype=np.int64)

    mr = mutual_reachability(dist, min_cluster_size)
    left, right, height, size = _single_linkage(k, _mst_edges(mr))

    def node_size(node: int) -> int:
        return 1 if node < k else size[node - k]

    def node_leaves(node: int) -> list[int]:
        out: list[int] = []
        stack = [node]
        while stack:
            x = stack.pop()
            if x < k:
                out.append(x)
            else:
                stack.extend((left[x - k], right[x - k]))
        return out

    # condensation: walk the dendrogram top-down, keeping one cluster id per
    # surviving branch; sides smaller than min_cluster_size fall out as points
    births = [0.0]
    parents = [-1]
    children: list[list[int]] = [[]]
    stability = [0.0]
    point_cluster = np.zeros(k, dtype=np.int64)
    root = k + len(height) - 1 if height else 0
    if root < k:  # k == 1 cannot happen here (k >= min_cluster_size >= 2)
        raise AssertionError("dendrogram must have internal nodes")
    stack = [(root, 0)]
    while stack:
        node, cid = stack.pop()
        lam = _lambda_of(height[node - k])
        halves = (left[node - k], right[node - k])
        sizes2 = (node_size(halves[0]), node_size(halves[1]))
        if min(sizes2) >= min_cluster_size:
            stability[cid] += sum(sizes2) * _delta(lam, births[cid])
            for child in halves:
                births.append(lam)
                parents.append(cid)
                children.append([])
                stability.append(0.0)
                children[cid].append(len(births) - 1)
                stack.append((child, len(births) - 1))
        else:
            for child, cs in zip(halves, sizes2):
                if cs >= min_cluster_size:
                    stack.append((child, cid))
                else:
                    for p in node_leaves(child):
                        point_cluster[p] = cid
                        stability[cid] += _delta(lam, births[cid])

    # excess-of-mass: a cluster beats its children when at least as stable as
    # their combined selection; the root only stands when nothing else exists
    n_clusters = len(births)
    selected = [True] * n_clusters
    best = stability[:]
    for cid in range(n_clusters - 1, 0, -1):
        if not children[cid]:
            continue
        child_sum = sum(best[ch] for ch in children[cid])
        if child_sum > stability[cid]:
            selected[cid] = False
            best[cid] = child_sum
        else:
            drop = list(children[cid])
            while drop:
                d = drop.pop()
                selected[d] = False
                drop.extend(children[d])
    selected[0] = n_clusters == 1

    labels = np.full(k, -1, dtype=np.int64)
    renumber: dict[int, int] = {}
    for p in range(k):
        cid = int(point_cluster[p])
        while cid != -1 and not selected[cid]:
            cid = parents[cid]
        if cid != -1:
            labels[p] = renumber.setdefault(cid, len(renumber))
    return labels
