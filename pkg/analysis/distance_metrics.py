# distance_metrics.py
# All-pairs BFS distances and the scalar invariants built on them:
# distance degrees D_i, Wiener index W, geometric mean M, diameter, moments N_k.

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from graphs import Graph

from .errors import AnalysisError, DisconnectedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistanceProfile:
    """Distance matrix plus derived scalars. dist is a read-only int64 array."""

    dist: np.ndarray
    distance_degrees: Tuple[int, ...]
    wiener: int
    geo_mean: float
    diameter: int

    @property
    def n(self) -> int:
        return len(self.distance_degrees)

    @property
    def sum_squared_distances(self) -> int:
        """Sum of d_ij^2 over unordered pairs i < j."""
        return int(np.sum(self.dist.astype(np.int64) ** 2)) // 2


def _bfs_levels(adj, source: int) -> list:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> np.ndarray:
    """Hop-count distance matrix, one BFS per source."""
    adj = g.adjacency()
    rows = []
    for source in range(g.n):
        levels = _bfs_levels(adj, source)
        for target, d in enumerate(levels):
            if d < 0:
                raise DisconnectedGraph(source, target)
        rows.append(levels)
    dist = np.array(rows, dtype=np.int64).reshape(g.n, g.n)
    dist.setflags(write=False)
    return dist


def geometric_mean_log(values: Sequence[float]) -> float:
    """exp(mean(log v)); 0 if any value is 0. Safe for products far past float range."""
    if not values:
        raise ValueError("geometric mean of an empty sequence")
    if any(v < 0 for v in values):
        raise ValueError("geometric mean needs nonnegative values")
    if any(v == 0 for v in values):
        return 0.0
    return math.exp(math.fsum(math.log(v) for v in values) / len(values))


def distance_profile(g: Graph) -> DistanceProfile:
    dist = distance_matrix(g)
    degrees = tuple(int(x) for x in dist.sum(axis=1))
    # Single vertex: D_1 = 0, so M = 0 (W = 0, diameter 0)
    return DistanceProfile(
        dist=dist,
        distance_degrees=degrees,
        wiener=sum(degrees) // 2,
        geo_mean=geometric_mean_log(degrees),
        diameter=int(dist.max()),
    )


def spectral_moment_from_distances(profile: DistanceProfile, k: int) -> int:
    """
    N_k = trace(D^k), exact.

    N_1 = 0 and N_2 = 2 * sum_{i<j} d_ij^2 in closed form; higher k by repeated
    multiplication over Python integers so nothing wraps around.
    """
    if k < 1:
        raise AnalysisError(f"moment order must be >= 1, got {k}")
    if k == 1:
        return 0
    if k == 2:
        return 2 * profile.sum_squared_distances
    base = profile.dist.astype(object)
    power = base
    for _ in range(k - 1):
        power = power @ base
    return int(sum(power[i, i] for i in range(profile.n)))


def is_distance_degree_regular(profile: DistanceProfile) -> Optional[int]:
    """Common distance degree r when all D_i are equal, else None."""
    first = profile.distance_degrees[0]
    if all(d == first for d in profile.distance_degrees):
        return first
    return None


def wiener_index_edge_cut(g: Graph) -> int:
    """
    Wiener index of a tree from edge cuts: sum over edges of the product of
    the two component sizes left after removing the edge.
    """
    if g.m != g.n - 1:
        raise AnalysisError("edge-cut Wiener formula needs a tree")
    adj = g.adjacency()
    # subtree sizes from an iterative DFS rooted at 0
    parent = [-1] * g.n
    order = []
    stack = [0]
    seen = {0}
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                stack.append(w)
    if len(order) != g.n:
        raise AnalysisError("edge-cut Wiener formula needs a tree")
    size = [1] * g.n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    return sum(size[u] * (g.n - size[u]) for u in range(g.n) if parent[u] >= 0)


def kober_gap(values: Sequence[float]) -> float:
    """
    n*sum(a) - (sum sqrt a)^2 - n*(mean(a) - geomean(a)) for nonnegative a.

    Never negative (Kober's inequality); zero when all a_i are equal.
    """
    n = len(values)
    total = math.fsum(values)
    left = n * (total / n - geometric_mean_log(values))
    right = n * total - math.fsum(math.sqrt(a) for a in values) ** 2
    return right - left
