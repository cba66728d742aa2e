"""Atlas of the 30 connected undirected graphlets on 2-5 nodes and their 73 automorphism orbits.

Each entry is ``(size, edges, orbits)`` where ``edges`` is the canonical
labelled edge list on nodes ``0..size-1`` and ``orbits[i]`` is the orbit id of
node ``i`` under the standard enumeration: orbit 0 is the edge endpoint, orbits
1-14 cover the 3- and 4-node graphlets, orbits 15-72 the 5-node graphlets.
The table is frozen data; everything else in this module is derived from it at
import time.
"""

from __future__ import annotations

from itertools import combinations, permutations

# (size, canonical edge list, orbit id per node position)
GRAPHLETS: tuple[tuple[int, tuple[tuple[int, int], ...], tuple[int, ...]], ...] = (
    (2, ((0, 1),), (0, 0)),
    (3, ((0, 1), (0, 2)), (2, 1, 1)),
    (3, ((0, 1), (0, 2), (1, 2)), (3, 3, 3)),
    (4, ((0, 1), (0, 3), (1, 2)), (5, 5, 4, 4)),
    (4, ((0, 1), (0, 2), (0, 3)), (7, 6, 6, 6)),
    (4, ((0, 2), (0, 3), (1, 2), (1, 3)), (8, 8, 8, 8)),
    (4, ((0, 1), (0, 2), (0, 3), (1, 2)), (11, 10, 10, 9)),
    (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)), (13, 13, 12, 12)),
    (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)), (14, 14, 14, 14)),
    (5, ((0, 2), (0, 4), (1, 2), (1, 3)), (16, 16, 17, 15, 15)),
    (5, ((0, 1), (0, 3), (0, 4), (1, 2)), (21, 20, 18, 19, 19)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4)), (23, 22, 22, 22, 22)),
    (5, ((0, 1), (0, 2), (0, 4), (1, 2), (1, 3)), (26, 26, 25, 24, 24)),
    (5, ((0, 1), (0, 4), (1, 2), (1, 3), (2, 3)), (28, 30, 29, 29, 27)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2)), (33, 32, 32, 31, 31)),
    (5, ((0, 3), (0, 4), (1, 2), (1, 4), (2, 3)), (34, 34, 34, 34, 34)),
    (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3)), (38, 36, 37, 37, 35)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3)), (42, 41, 40, 40, 39)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)), (44, 43, 43, 43, 43)),
    (5, ((0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (2, 3)), (47, 48, 48, 46, 45)),
    (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)), (50, 50, 49, 49, 49)),
    (5, ((0, 1), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)), (53, 53, 51, 51, 52)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)), (55, 55, 54, 54, 54)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)), (58, 57, 57, 57, 56)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 3)), (61, 60, 60, 59, 59)),
    (5, ((0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)), (63, 63, 64, 64, 62)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)), (67, 67, 66, 66, 65)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)), (69, 68, 68, 68, 68)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)), (71, 71, 71, 70, 70)),
    (5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)), (72, 72, 72, 72, 72)),
)

ORBIT_COUNT: dict[int, int] = {4: 15, 5: 73}

# node pairs in mask bit order, per subgraph size
PAIR_BITS: dict[int, tuple[tuple[int, int], ...]] = {
    k: tuple(combinations(range(k), 2)) for k in (2, 3, 4, 5)
}


def _edges_to_mask(size: int, edges: tuple[tuple[int, int], ...]) -> int:
    bit = {pair: i for i, pair in enumerate(PAIR_BITS[size])}
    mask = 0
    for a, b in edges:
        mask |= 1 << bit[(a, b) if a < b else (b, a)]
    return mask


def _build_orbit_tables() -> dict[int, dict[int, tuple[int, ...]]]:
    """Map every connected labelled graph (as an edge bitmask over PAIR_BITS
    order) to the orbit id of each of its nodes, by permuting the canonical
    graphlets."""
    tables: dict[int, dict[int, tuple[int, ...]]] = {2: {}, 3: {}, 4: {}, 5: {}}
    for size, edges, orbits in GRAPHLETS:
        bit = {pair: i for i, pair in enumerate(PAIR_BITS[size])}
        table = tables[size]
        for perm in permutations(range(size)):
            mask = 0
            for a, b in edges:
                pa, pb = perm[a], perm[b]
                mask |= 1 << bit[(pa, pb) if pa < pb else (pb, pa)]
            if mask not in table:
                # orbit of relabelled node perm[i] is the orbit of canonical node i
                relabelled = [0] * size
                for i in range(size):
                    relabelled[perm[i]] = orbits[i]
                table[mask] = tuple(relabelled)
    return tables


ORBITS_OF_MASK: dict[int, dict[int, tuple[int, ...]]] = _build_orbit_tables()

# orbit id -> index of the graphlet it belongs to, and how many of that
# graphlet's nodes sit on the orbit (used by count identities in tests)
GRAPHLET_OF_ORBIT: tuple[int, ...] = tuple(
    next(gi for gi, (_, _, orbs) in enumerate(GRAPHLETS) if o in orbs)
    for o in range(73)
)
ORBIT_MULTIPLICITY: tuple[int, ...] = tuple(
    GRAPHLETS[GRAPHLET_OF_ORBIT[o]][2].count(o) for o in range(73)
)
