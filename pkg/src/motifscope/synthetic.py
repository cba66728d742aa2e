"""Generators for synthetic dynamic networks with planted motif structure.

Two regimes with opposite triad signatures: one plants feed-forward loops
(a->b, b->c, a->c), the other plants 3-cycles (a->b, b->c, c->a). Alternating
them in blocks produces a dynamic network whose snapshots should group into
regime-pure superfamilies.
"""

from __future__ import annotations

import random

from .temporal import DynamicNetwork, Snapshot

REGIMES = ("feedforward", "cycle")


def _planted_edges(regime: str, node_count: int, triple_count: int,
                   rng: random.Random) -> frozenset[tuple[str, str]]:
    nodes = [f"n{i}" for i in range(node_count)]
    edges: set[tuple[str, str]] = set()
    for _ in range(triple_count):
        a, b, c = rng.sample(nodes, 3)
        if regime == "feedforward":
            edges.update(((a, b), (b, c), (a, c)))
        elif regime == "cycle":
            edges.update(((a, b), (b, c), (c, a)))
        else:
            raise ValueError(f"unknown regime: {regime}")
    return frozenset(edges)


def regime_snapshot(regime: str, index: int, node_count: int = 30,
                    triple_count: int = 12, seed: int = 0,
                    bin_width: int = 1) -> Snapshot:
    rng = random.Random(f"{seed}:{index}:{regime}")
    edges = _planted_edges(regime, node_count, triple_count, rng)
    nodes = tuple(sorted({v for pair in edges for v in pair}))
    start = index * bin_width
    return Snapshot(index, (start, start + bin_width), nodes, edges)


def planted_network(block_length: int = 20, blocks: int = 4, node_count: int = 30,
                    triple_count: int = 12, seed: int = 0,
                    dataset_id: str = "planted") -> DynamicNetwork:
    """``blocks`` alternating regime blocks of ``block_length`` snapshots."""
    snaps = []
    for b in range(blocks):
        regime = REGIMES[b % 2]
        for i in range(block_length):
            index = b * block_length + i
            snaps.append(
                regime_snapshot(regime, index, node_count, triple_count, seed)
            )
    return DynamicNetwork(dataset_id, 1, tuple(snaps))


def regime_of_snapshot(index: int, block_length: int = 20) -> str:
    return REGIMES[(index // block_length) % 2]
