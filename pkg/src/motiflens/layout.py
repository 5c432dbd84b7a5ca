"""2-D node placement for node-link diagrams.

Stress majorization over graph-theoretic distances keeps linked nodes
close, followed by an overlap-removal pass that nudges colliding nodes
along a deterministic spiral until every disc is free. The result is a
pure function of (network, seed).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import Network

NODE_RADIUS = 10.0
EDGE_LENGTH = 60.0
ITERATIONS = 200
_GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))


@dataclass(frozen=True)
class NodeCoordinates:
    """node-id -> (x, y) in abstract layout units."""

    positions: dict[str, tuple[float, float]]
    node_radius: float = NODE_RADIUS

    def __getitem__(self, node_id: str) -> tuple[float, float]:
        return self.positions[node_id]


def _hop_distances(net: Network) -> np.ndarray:
    ids = net.node_ids
    index = {n: i for i, n in enumerate(ids)}
    n = len(ids)
    dist = np.full((n, n), -1.0)
    neigh = net.neighbors()
    for s in range(n):
        dist[s, s] = 0.0
        queue = deque([ids[s]])
        while queue:
            u = queue.popleft()
            du = dist[s, index[u]]
            for v in neigh[u]:
                if dist[s, index[v]] < 0:
                    dist[s, index[v]] = du + 1
                    queue.append(v)
    finite_max = dist.max() if dist.max() > 0 else 1.0
    dist[dist < 0] = finite_max * 1.5  # disconnected pairs kept loosely apart
    return dist


def force_layout(net: Network, seed: int = 0) -> NodeCoordinates:
    """Deterministic stress-minimizing layout with overlap removal."""
    ids = net.node_ids
    n = len(ids)
    if n == 0:
        raise ValueError("cannot lay out an empty network")
    if n == 1:
        return NodeCoordinates({ids[0]: (0.0, 0.0)})

    rng = np.random.RandomState(seed & 0xFFFFFFFF)
    span = EDGE_LENGTH * math.sqrt(n)
    x = rng.uniform(0.0, span, size=(n, 2))

    d = _hop_distances(net) * EDGE_LENGTH
    w = 1.0 / np.maximum(d, 1e-9) ** 2
    np.fill_diagonal(w, 0.0)
    w_sum = w.sum(axis=1, keepdims=True)

    for _ in range(ITERATIONS):
        diff = x[:, None, :] - x[None, :, :]
        norm = np.sqrt((diff ** 2).sum(axis=2))
        np.fill_diagonal(norm, 1.0)
        degenerate = norm < 1e-12
        norm[degenerate] = 1.0
        unit = diff / norm[:, :, None]
        # coincident points get a fixed push direction
        unit[degenerate] = np.array([1.0, 0.0])
        target = x[None, :, :] + d[:, :, None] * unit
        x = (w[:, :, None] * target).sum(axis=1) / w_sum

    x = _remove_overlaps(x)
    x -= x.mean(axis=0)
    return NodeCoordinates({ids[i]: (float(x[i, 0]), float(x[i, 1])) for i in range(n)})


def _remove_overlaps(x: np.ndarray, radius: float = NODE_RADIUS) -> np.ndarray:
    """Accept nodes one by one; walk colliders along a spiral until free."""
    min_dist = 2.0 * radius
    out = x.copy()
    for i in range(len(out)):
        base = out[i].copy()
        t = 0
        while True:
            ok = True
            for j in range(i):
                if np.hypot(*(out[i] - out[j])) < min_dist - 1e-9:
                    ok = False
                    break
            if ok:
                break
            t += 1
            angle = t * _GOLDEN_ANGLE
            r = min_dist * 0.3 * math.sqrt(t)
            out[i] = base + np.array([r * math.cos(angle), r * math.sin(angle)])
    return out
