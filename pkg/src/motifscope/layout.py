"""Deterministic force-directed layout for snapshot and supergraph display.

Degree-weighted repulsion (k_r * m_i * m_j / d^2 along the separation), linear
edge attraction, constant-magnitude gravity toward the origin (k_g * m), and
the swing/traction speed adaptation scheme: global speed chases a jitter
tolerance target, local displacement is damped by each node's own swing.

Initial positions come from hashing (seed, node id), so a layout is a pure
function of the graph, the seed, and the iteration count; no RNG state is
involved.
"""

from __future__ import annotations

import hashlib
import math
import struct

import numpy as np

from .temporal import Snapshot

REPULSION = 2.0
GRAVITY = 1.0


def _unit_floats(seed: int, node_id: str) -> tuple[float, float]:
    digest = hashlib.sha256(f"{seed}|{node_id}".encode("utf-8")).digest()
    a, b = struct.unpack(">QQ", digest[:16])
    return a / 2.0**64, b / 2.0**64


def _initial_positions(nodes: tuple[str, ...], seed: int) -> np.ndarray:
    radius = math.sqrt(max(len(nodes), 1))
    pos = np.zeros((len(nodes), 2), dtype=np.float64)
    for i, node in enumerate(nodes):
        u, v = _unit_floats(seed, node)
        r = radius * math.sqrt(u)
        theta = 2.0 * math.pi * v
        pos[i] = (r * math.cos(theta), r * math.sin(theta))
    return pos


def force_layout(g: Snapshot, iterations: int = 500, seed: int = 0) -> dict[str, tuple[float, float]]:
    """Node positions after ``iterations`` rounds of force simulation."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    n = g.node_count
    if n == 0:
        return {}
    if n == 1:
        # gravity fixed point
        return {g.nodes[0]: (0.0, 0.0)}
    pos = _initial_positions(g.nodes, seed)

    idx = {v: i for i, v in enumerate(g.nodes)}
    pairs = sorted({(min(idx[a], idx[b]), max(idx[a], idx[b])) for a, b in g.edges})
    e_src = np.array([p for p, _ in pairs], dtype=np.int64)
    e_dst = np.array([q for _, q in pairs], dtype=np.int64)
    deg = np.zeros(n, dtype=np.float64)
    np.add.at(deg, e_src, 1.0)
    np.add.at(deg, e_dst, 1.0)
    mass = 1.0 + deg

    speed = 1.0
    speed_efficiency = 1.0
    jitter_tolerance = 1.0
    forces = np.zeros((n, 2), dtype=np.float64)
    chunk = max(1, min(n, 2**22 // max(n, 1)))

    for _ in range(iterations):
        old = forces
        forces = np.zeros((n, 2), dtype=np.float64)

        for start in range(0, n, chunk):
            stop = min(start + chunk, n)
            delta = pos[start:stop, None, :] - pos[None, :, :]
            d2 = np.einsum("ijk,ijk->ij", delta, delta)
            with np.errstate(divide="ignore"):
                factor = REPULSION * mass[start:stop, None] * mass[None, :] / d2
            factor[d2 == 0.0] = 0.0
            forces[start:stop] += np.einsum("ij,ijk->ik", factor, delta)

        dist = np.linalg.norm(pos, axis=1)
        nonzero = dist > 0.0
        grav = np.zeros_like(pos)
        grav[nonzero] = (
            -pos[nonzero] * (GRAVITY * mass[nonzero] / dist[nonzero])[:, None]
        )
        forces += grav

        if len(e_src):
            pull = pos[e_src] - pos[e_dst]
            np.add.at(forces, e_src, -pull)
            np.add.at(forces, e_dst, pull)

        swing = np.linalg.norm(old - forces, axis=1)
        total_swing = float(np.dot(mass, swing))
        total_traction = 0.5 * float(np.dot(mass, np.linalg.norm(old + forces, axis=1)))
        if total_traction == 0.0:
            continue

        opt_jitter = 0.05 * math.sqrt(n)
        jt = jitter_tolerance * max(
            math.sqrt(opt_jitter),
            min(10.0, opt_jitter * total_traction / n**2),
        )
        if total_swing / total_traction > 2.0:
            if speed_efficiency > 0.05:
                speed_efficiency *= 0.5
            jt = max(jt, jitter_tolerance)
        if total_swing == 0.0:
            target = math.inf
        else:
            target = jt * speed_efficiency * total_traction / total_swing
        if total_swing > jt * total_traction:
            if speed_efficiency > 0.05:
                speed_efficiency *= 0.7
        elif speed < 1000.0:
            speed_efficiency *= 1.3
        speed = speed + min(target - speed, 0.5 * speed)

        local = mass * swing
        factor = speed / (1.0 + np.sqrt(speed * local))
        pos = pos + forces * factor[:, None]

    return {v: (float(pos[i, 0]), float(pos[i, 1])) for v, i in idx.items()}
