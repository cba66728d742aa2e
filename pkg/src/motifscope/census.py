"""Census of the thirteen connected directed triads and motif significance profiles.

Index contract (1-based triad ids; position in every 13-vector is id - 1):

     1  021D   A<-B->C
     2  021U   A->B<-C
     3  021C   A->B->C
     4  111D   A<->B<-C
     5  111U   A<->B->C
     6  030T   A->B<-C, A->C
     7  030C   A<-B<-C, A->C
     8  201    A<->B<->C
     9  120D   A<-B->C, A<->C
    10  120U   A->B<-C, A<->C
    11  120C   A->B->C, A<->C
    12  210    A->B<->C, A<->C
    13  300    A<->B<->C, A<->C

The three classes with fewer than two linked dyads (003, 012, 102) are
disconnected and carry no motif signal; they are excluded throughout.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .nullmodel import NullEnsembleStats, ensemble_stats
from .temporal import DynamicNetwork, Snapshot

TRIAD_LABELS: tuple[str, ...] = (
    "021D", "021U", "021C", "111D", "111U", "030T", "030C",
    "201", "120D", "120U", "120C", "210", "300",
)

# Dyad-code lookup: bit b set in the code when the b-th ordered pair of
# (v->u, u->v, v->w, w->v, u->w, w->u) is an arc. Entry = triad type in the
# 16-class order (003, 012, 102, then TRIAD_LABELS); types up to 3 are the
# disconnected ones.
_TRICODES = (
    1, 2, 2, 3, 2, 4, 6, 8, 2, 6, 5, 7, 3, 8, 7, 11, 2, 6, 4, 8, 5, 9,
    9, 13, 6, 10, 9, 14, 7, 14, 12, 15, 2, 5, 6, 7, 6, 9, 10, 14, 4, 9,
    9, 12, 8, 13, 14, 15, 3, 7, 8, 11, 7, 12, 14, 15, 8, 14, 13, 15, 11,
    15, 15, 16,
)


def _tricode(edges: frozenset[tuple[str, str]], v: str, u: str, w: str) -> int:
    code = 0
    for bit, pair in enumerate(
        ((v, u), (u, v), (v, w), (w, v), (u, w), (w, u))
    ):
        if pair in edges:
            code |= 1 << bit
    return code


def classify_triad(edges: frozenset[tuple[str, str]], v: str, u: str, w: str) -> int:
    """Triad id (1..13) of the subgraph induced on {v, u, w}; 0 if it has
    fewer than two linked dyads."""
    t = _TRICODES[_tricode(edges, v, u, w)]
    return t - 3 if t > 3 else 0


def count_triads(g: Snapshot) -> np.ndarray:
    """Counts of the 13 connected triad classes among induced 3-node
    subgraphs.

    Node-iterator enumeration: each connected triple {v, u, w} is reached
    from its adjacent pair (v, u) with the lowest-ranked v, so it is
    classified exactly once; disconnected triples are never visited.
    """
    counts = np.zeros(13, dtype=np.int64)
    if g.node_count < 3:
        return counts
    rank = {v: i for i, v in enumerate(g.nodes)}
    edges = g.edges
    nbrs: dict[str, set[str]] = {v: set() for v in g.nodes}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    for v in g.nodes:
        vnbrs = nbrs[v]
        for u in vnbrs:
            if rank[u] <= rank[v]:
                continue
            third = (vnbrs | nbrs[u]) - {u, v}
            for w in third:
                if rank[u] < rank[w] or (
                    rank[v] < rank[w] < rank[u] and w not in vnbrs
                ):
                    t = _TRICODES[_tricode(edges, v, u, w)]
                    if t > 3:
                        counts[t - 4] += 1
    return counts


def triad_instances(g: Snapshot, triad_id: int) -> list[tuple[str, str, str]]:
    """All induced 3-node subgraphs of class ``triad_id`` (1..13), as sorted
    node triples. Same enumeration as count_triads."""
    if not 1 <= triad_id <= 13:
        raise ValueError("triad_id must be in 1..13")
    found: list[tuple[str, str, str]] = []
    if g.node_count < 3:
        return found
    rank = {v: i for i, v in enumerate(g.nodes)}
    edges = g.edges
    nbrs: dict[str, set[str]] = {v: set() for v in g.nodes}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    for v in g.nodes:
        vnbrs = nbrs[v]
        for u in vnbrs:
            if rank[u] <= rank[v]:
                continue
            for w in (vnbrs | nbrs[u]) - {u, v}:
                if rank[u] < rank[w] or (
                    rank[v] < rank[w] < rank[u] and w not in vnbrs
                ):
                    if _TRICODES[_tricode(edges, v, u, w)] - 3 == triad_id:
                        found.append(tuple(sorted((v, u, w))))
    found.sort()
    return found


def z_scores(real_counts: np.ndarray, stats: NullEnsembleStats) -> np.ndarray:
    """Standard score of each triad count against the null ensemble; classes
    with zero ensemble spread score 0."""
    z = np.zeros(13, dtype=np.float64)
    nonzero = stats.std > 0
    z[nonzero] = (real_counts[nonzero] - stats.mean[nonzero]) / stats.std[nonzero]
    return z


def significance_profile(z: np.ndarray) -> np.ndarray:
    """z normalized to the unit sphere; the all-zero z stays all-zero."""
    norm = float(np.linalg.norm(z))
    if norm == 0.0:
        return np.zeros_like(z)
    return z / norm


def snapshot_profile(g: Snapshot, null_count: int, seed: int,
                     swap_factor: int = 10) -> np.ndarray:
    """Significance profile of one snapshot against its own null ensemble.

    A snapshot without edges has no ensemble and maps to the zero vector.
    """
    if g.edge_count == 0:
        return np.zeros(13, dtype=np.float64)
    real = count_triads(g)
    stats = ensemble_stats(g, null_count, seed, swap_factor)
    return significance_profile(z_scores(real, stats))


@dataclass(frozen=True)
class CensusMatrix:
    """13 x T matrix of significance profiles; column t belongs to snapshot t.

    ``times`` are snapshot indices (positions on the discrete time axis).
    """

    labels: tuple[str, ...]
    times: tuple[int, ...]
    values: np.ndarray  # shape (13, T), float64
    null_count: int
    seed: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "motifs": list(self.labels),
                "times": list(self.times),
                "values": [float(x) for x in self.values.ravel(order="C")],
                "nullCount": self.null_count,
                "seed": self.seed,
                "rng": "python-random-mt19937",
            },
            indent=None,
            separators=(",", ":"),
        )

    @staticmethod
    def from_json(text: str) -> "CensusMatrix":
        obj = json.loads(text)
        labels = tuple(obj["motifs"])
        times = tuple(int(t) for t in obj["times"])
        values = np.asarray(obj["values"], dtype=np.float64).reshape(
            len(labels), len(times)
        )
        return CensusMatrix(labels, times, values, int(obj["nullCount"]), int(obj["seed"]))

    def to_csv(self) -> str:
        lines = ["motif," + ",".join(str(t) for t in self.times)]
        for i, label in enumerate(self.labels):
            lines.append(label + "," + ",".join(repr(float(x)) for x in self.values[i]))
        return "\n".join(lines) + "\n"


def _profile_task(args: tuple[Snapshot, int, int]) -> np.ndarray:
    g, null_count, seed = args
    return snapshot_profile(g, null_count, seed)


def build_census_matrix(network: DynamicNetwork, null_count: int = 100,
                        seed: int = 0, workers: int | None = None) -> CensusMatrix:
    """Significance profile of every snapshot.

    Snapshot t uses the derived seed ``seed ^ t`` so columns are independent
    of evaluation order and of how work is split across processes.
    """
    tasks = [(g, null_count, seed ^ g.index) for g in network.snapshots]
    if workers and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            columns = list(pool.map(_profile_task, tasks, chunksize=8))
    else:
        columns = [_profile_task(t) for t in tasks]
    values = (
        np.stack(columns, axis=1)
        if columns
        else np.zeros((13, 0), dtype=np.float64)
    )
    times = tuple(g.index for g in network.snapshots)
    return CensusMatrix(TRIAD_LABELS, times, values, null_count, seed)
