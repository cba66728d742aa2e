"""Graphlet degree vectors on the undirected projection of a snapshot.

The GDV of a node counts, for every automorphism orbit of the connected 2-5
node graphlets, how many induced subgraphs contain the node on that orbit.
Orbit 0 is plain degree. Arc direction is discarded here by design: graphlet
orbits are defined on undirected graphs, so a->b and b->a project to the same
edge and antiparallel arcs collapse.

Subgraph enumeration walks each connected induced subgraph exactly once
(extension sets restricted to higher-ranked, exclusive neighbors); the orbit
of every member node then comes from a lookup keyed by the subgraph's edge
bitmask.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .graphlet_atlas import ORBIT_COUNT, ORBITS_OF_MASK, PAIR_BITS
from .temporal import Snapshot


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph with index-based adjacency; ``nodes[i]`` is the
    label of index i and ``adj[i]`` its sorted neighbor indices."""

    nodes: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def undirect(g: Snapshot) -> UndirectedGraph:
    """Undirected projection: one edge per adjacent node pair."""
    idx = {v: i for i, v in enumerate(g.nodes)}
    nbrs: list[set[int]] = [set() for _ in g.nodes]
    for a, b in g.edges:
        ia, ib = idx[a], idx[b]
        nbrs[ia].add(ib)
        nbrs[ib].add(ia)
    return UndirectedGraph(g.nodes, tuple(tuple(sorted(s)) for s in nbrs))


def _accumulate(values: np.ndarray, adjsets: list[set[int]], sub: list[int]) -> None:
    members = sorted(sub)
    k = len(members)
    mask = 0
    for bit, (p, q) in enumerate(PAIR_BITS[k]):
        if members[q] in adjsets[members[p]]:
            mask |= 1 << bit
    orbits = ORBITS_OF_MASK[k][mask]
    for p, node in enumerate(members):
        values[orbits[p], node] += 1


def compute_gdv(g: Snapshot | UndirectedGraph, max_graphlet_size: int = 4) -> "GdvMatrix":
    """Graphlet degree vector of every node, as an (orbits x nodes) matrix.

    ``max_graphlet_size`` 4 gives orbits 0-14, 5 gives the full 0-72.
    """
    if max_graphlet_size not in ORBIT_COUNT:
        raise ValueError("max_graphlet_size must be 4 or 5")
    u = g if isinstance(g, UndirectedGraph) else undirect(g)
    n = u.node_count
    orbit_count = ORBIT_COUNT[max_graphlet_size]
    values = np.zeros((orbit_count, n), dtype=np.int64)
    adjsets = [set(a) for a in u.adj]

    def extend(sub: list[int], ext: list[int], seen: set[int], v: int) -> None:
        if len(sub) >= 2:
            _accumulate(values, adjsets, sub)
        if len(sub) == max_graphlet_size:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            fresh = [x for x in adjsets[w] if x > v and x not in seen]
            sub.append(w)
            extend(sub, ext + fresh, seen | set(adjsets[w]), v)
            sub.pop()

    for v in range(n):
        start = [x for x in adjsets[v] if x > v]
        extend([v], start, {v} | set(adjsets[v]), v)
    return GdvMatrix(tuple(range(orbit_count)), u.nodes, values, max_graphlet_size)


@dataclass(frozen=True)
class GdvMatrix:
    """Orbit-count matrix; row r is orbit r, column j is node ``node_ids[j]``."""

    orbits: tuple[int, ...]
    node_ids: tuple[str, ...]
    values: np.ndarray  # shape (len(orbits), len(node_ids)), int64
    max_graphlet_size: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "orbits": list(self.orbits),
                "nodes": list(self.node_ids),
                "values": [int(x) for x in self.values.ravel(order="C")],
                "maxGraphletSize": self.max_graphlet_size,
            },
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "GdvMatrix":
        obj = json.loads(text)
        orbits = tuple(int(o) for o in obj["orbits"])
        nodes = tuple(obj["nodes"])
        values = np.asarray(obj["values"], dtype=np.int64).reshape(
            len(orbits), len(nodes)
        )
        return GdvMatrix(orbits, nodes, values, int(obj["maxGraphletSize"]))

    def to_csv(self) -> str:
        lines = ["orbit," + ",".join(self.node_ids)]
        for i, orbit in enumerate(self.orbits):
            lines.append(str(orbit) + "," + ",".join(str(int(x)) for x in self.values[i]))
        return "\n".join(lines) + "\n"


def gdv_similarity(m: GdvMatrix, i: int, j: int) -> float:
    """Cosine similarity of two node columns; two all-zero vectors count as
    identical (1), one all-zero against anything else as dissimilar (0)."""
    a = m.values[:, i].astype(np.float64)
    b = m.values[:, j].astype(np.float64)
    na = float(np.linalg.norm(a))
    nb = float(np.linalg.norm(b))
    if na == 0.0 and nb == 0.0:
        return 1.0
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))
