"""Shared fixtures and independent oracles.

The triad oracle classifies by canonical isomorphism against explicit
representative edge sets, not by the package's dyad-code table; the GDV
oracle enumerates all node subsets instead of growing extension sets. Both
are deliberately slow and simple.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from motifscope.graphlet_atlas import ORBIT_COUNT, ORBITS_OF_MASK, PAIR_BITS
from motifscope.graphlets import UndirectedGraph
from motifscope.temporal import Snapshot

# representative arc sets on nodes (0, 1, 2), one per connected triad class
TRIAD_REPRESENTATIVES: dict[str, frozenset[tuple[int, int]]] = {
    "021D": frozenset({(1, 0), (1, 2)}),
    "021U": frozenset({(0, 1), (2, 1)}),
    "021C": frozenset({(0, 1), (1, 2)}),
    "111D": frozenset({(0, 1), (1, 0), (2, 1)}),
    "111U": frozenset({(0, 1), (1, 0), (1, 2)}),
    "030T": frozenset({(0, 1), (2, 1), (0, 2)}),
    "030C": frozenset({(1, 0), (2, 1), (0, 2)}),
    "201": frozenset({(0, 1), (1, 0), (1, 2), (2, 1)}),
    "120D": frozenset({(1, 0), (1, 2), (0, 2), (2, 0)}),
    "120U": frozenset({(0, 1), (2, 1), (0, 2), (2, 0)}),
    "120C": frozenset({(0, 1), (1, 2), (0, 2), (2, 0)}),
    "210": frozenset({(0, 1), (1, 2), (2, 1), (0, 2), (2, 0)}),
    "300": frozenset({(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)}),
}


def canonical_triad(arcs: frozenset[tuple[int, int]]) -> tuple:
    """Lexicographically smallest arc set over all relabelings of {0,1,2}."""
    best = None
    for perm in permutations(range(3)):
        relabeled = tuple(sorted((perm[a], perm[b]) for a, b in arcs))
        if best is None or relabeled < best:
            best = relabeled
    return best


_CANON_TO_LABEL = {canonical_triad(arcs): lab for lab, arcs in TRIAD_REPRESENTATIVES.items()}
assert len(_CANON_TO_LABEL) == 13


def oracle_triad_label(edges: frozenset[tuple[str, str]], triple) -> str | None:
    """Label of the induced triad, or None when disconnected."""
    a, b, c = triple
    index = {a: 0, b: 1, c: 2}
    arcs = frozenset(
        (index[u], index[v]) for u, v in edges if u in index and v in index
    )
    links = {frozenset((u, v)) for u, v in arcs}
    if len(links) < 2:
        return None
    return _CANON_TO_LABEL[canonical_triad(arcs)]


def oracle_census(g: Snapshot, labels: tuple[str, ...]) -> np.ndarray:
    counts = np.zeros(len(labels), dtype=np.int64)
    for triple in combinations(g.nodes, 3):
        lab = oracle_triad_label(g.edges, triple)
        if lab is not None:
            counts[labels.index(lab)] += 1
    return counts


def oracle_gdv(u: UndirectedGraph, max_size: int) -> np.ndarray:
    """Subset-enumeration GDV: every node subset of size 2..max_size that
    induces a connected subgraph contributes one orbit hit per member."""
    n = u.node_count
    adjsets = [set(a) for a in u.adj]
    values = np.zeros((ORBIT_COUNT[max_size], n), dtype=np.int64)
    for k in range(2, max_size + 1):
        pair_bits = PAIR_BITS[k]
        for subset in combinations(range(n), k):
            mask = 0
            for bit, (p, q) in enumerate(pair_bits):
                if subset[q] in adjsets[subset[p]]:
                    mask |= 1 << bit
            orbits = ORBITS_OF_MASK[k].get(mask)
            if orbits is None:  # disconnected induced subgraph
                continue
            for pos, node in enumerate(subset):
                values[orbits[pos], node] += 1
    return values


def random_snapshot(rng: random.Random, n: int, p: float, index: int = 0) -> Snapshot:
    names = tuple(f"v{i}" for i in range(n))
    edges = {
        (names[i], names[j])
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < p
    }
    nodes = tuple(sorted({v for e in edges for v in e}))
    return Snapshot(index, (index, index + 1), nodes, frozenset(edges))


def random_undirected(rng: random.Random, n: int, p: float) -> UndirectedGraph:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                nbrs[i].add(j)
                nbrs[j].add(i)
    return UndirectedGraph(
        tuple(f"v{i}" for i in range(n)), tuple(tuple(sorted(s)) for s in nbrs)
    )


def snapshot_from_arcs(arcs, index: int = 0, nodes=None) -> Snapshot:
    if nodes is None:
        nodes = tuple(sorted({v for e in arcs for v in e}))
    return Snapshot(index, (index, index + 1), tuple(nodes), frozenset(arcs))
