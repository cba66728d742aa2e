"""Timestamped edge lists and their discretization into snapshot sequences.

A dynamic network is an ordered sequence of directed simple graphs obtained by
slicing a timestamped edge list into fixed-width bins. Bins with no events are
kept as empty snapshots so that snapshot index is an affine function of time.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class TemporalEdge:
    """One directed contact event."""

    source: str
    target: str
    timestamp: int  # seconds


@dataclass(frozen=True)
class EdgeListFormat:
    """Shape of a delimited edge-list file.

    ``header`` may be True, False, or "auto"; auto treats row 1 as a header
    when its timestamp column does not parse as a number. Column indices
    allow files that carry extra columns (weights, ratings) between the
    fields of interest.
    """

    delimiter: str = ","
    source_col: int = 0
    target_col: int = 1
    time_col: int = 2
    header: bool | str = "auto"


@dataclass(frozen=True)
class EdgeList:
    edges: tuple[TemporalEdge, ...]
    malformed_rows: int
    path: str


@dataclass(frozen=True)
class Snapshot:
    """Directed simple graph of one time bin.

    ``interval`` is the half-open [start, end) span of the bin in seconds.
    ``nodes`` contains exactly the endpoints of ``edges`` (no isolated
    carry-over nodes), sorted. ``edges`` holds no self-loops; parallel events
    inside the bin collapse to one arc.
    """

    index: int
    interval: tuple[int, int]
    nodes: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def out_adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for a, b in self.edges:
            adj[a].add(b)
        return adj

    def in_adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for a, b in self.edges:
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class DynamicNetwork:
    dataset_id: str
    bin_width: int
    snapshots: tuple[Snapshot, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.snapshots)

    def node_universe(self) -> tuple[str, ...]:
        seen: set[str] = set()
        for snap in self.snapshots:
            seen.update(snap.nodes)
        return tuple(sorted(seen))


def _parse_time(text: str) -> int:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        # tolerate fractional-second stamps by flooring
        return int(float(text))


def ingest(path: str | Path, fmt: EdgeListFormat = EdgeListFormat()) -> EdgeList:
    """Read a delimited edge-list file into timestamped edges.

    Malformed rows (too few columns, unparsable timestamp, empty endpoint)
    are counted and skipped. Self-loops are retained here; they drop out at
    discretization. Raises ValueError when no row survives.
    """
    path = Path(path)
    needed = max(fmt.source_col, fmt.target_col, fmt.time_col) + 1
    edges: list[TemporalEdge] = []
    malformed = 0
    with open(path, newline="", encoding="utf-8") as fh:
        rows = csv.reader(fh, delimiter=fmt.delimiter)
        for i, row in enumerate(rows):
            if i == 0 and fmt.header is not False:
                if fmt.header is True:
                    continue
                try:  # auto: header iff the timestamp column is not numeric
                    _parse_time(row[fmt.time_col])
                except (ValueError, IndexError):
                    continue
            if len(row) < needed:
                malformed += 1
                continue
            src = row[fmt.source_col].strip()
            dst = row[fmt.target_col].strip()
            try:
                ts = _parse_time(row[fmt.time_col])
            except ValueError:
                malformed += 1
                continue
            if not src or not dst:
                malformed += 1
                continue
            edges.append(TemporalEdge(src, dst, ts))
    if not edges:
        raise ValueError(f"{path}: no valid rows")
    return EdgeList(tuple(edges), malformed, str(path))


def discretize(edge_list: EdgeList, bin_width: int, dataset_id: str = "") -> DynamicNetwork:
    """Slice edges into consecutive bins of ``bin_width`` seconds.

    Edge (u, v, t) lands in bin floor((t - t_min) / bin_width). The sequence
    runs from the bin of the earliest event to the bin of the latest with no
    holes; intervening bins without events become empty snapshots.
    """
    if bin_width <= 0:
        raise ValueError("bin_width must be positive")
    edges = edge_list.edges
    t_min = min(e.timestamp for e in edges)
    t_max = max(e.timestamp for e in edges)
    count = (t_max - t_min) // bin_width + 1
    per_bin: list[set[tuple[str, str]]] = [set() for _ in range(count)]
    for e in edges:
        if e.source == e.target:
            continue
        per_bin[(e.timestamp - t_min) // bin_width].add((e.source, e.target))
    snaps = []
    for i, bin_edges in enumerate(per_bin):
        nodes = sorted({v for pair in bin_edges for v in pair})
        start = t_min + i * bin_width
        snaps.append(Snapshot(i, (start, start + bin_width), tuple(nodes), frozenset(bin_edges)))
    return DynamicNetwork(dataset_id or Path(edge_list.path).stem, bin_width, tuple(snaps))


def supergraph(network: DynamicNetwork) -> Snapshot:
    """Union of all snapshots: every node and arc that ever occurred."""
    all_edges: set[tuple[str, str]] = set()
    all_nodes: set[str] = set()
    for snap in network.snapshots:
        all_edges.update(snap.edges)
        all_nodes.update(snap.nodes)
    if network.snapshots:
        start = network.snapshots[0].interval[0]
        end = network.snapshots[-1].interval[1]
    else:
        start = end = 0
    return Snapshot(-1, (start, end), tuple(sorted(all_nodes)), frozenset(all_edges))
