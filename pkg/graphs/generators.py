# generators.py
# Named graph families: complete, cycle, path, star, the five-vertex chemical tree
# and the C60 truncated icosahedron.

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from .graph_core import Graph, GraphError

logger = logging.getLogger(__name__)


class GraphFamilyError(GraphError):
    """Unknown family name or parameters outside the family's domain."""


@dataclass(frozen=True)
class GraphFamily:
    tag: str
    params: Tuple[int, ...] = ()

    def label(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}({', '.join(str(p) for p in self.params)})"


# ===================== family builders =====================

def _complete(n: int) -> Graph:
    if n < 1:
        raise GraphFamilyError(f"complete(n) needs n >= 1, got {n}")
    return Graph(n=n, edges=tuple(combinations(range(n), 2)))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise GraphFamilyError(f"cycle(n) needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _path(n: int) -> Graph:
    if n < 1:
        raise GraphFamilyError(f"path(n) needs n >= 1, got {n}")
    return Graph(n=n, edges=tuple((i, i + 1) for i in range(n - 1)))


def _star(n: int) -> Graph:
    # centre 0, leaves 1..n-1
    if n < 1:
        raise GraphFamilyError(f"star(n) needs n >= 1, got {n}")
    return Graph(n=n, edges=tuple((0, i) for i in range(1, n)))


def _chemical_tree_fig1() -> Graph:
    # Unique tree matching the printed 5x5 distance matrix (first row 0 1 2 3 3):
    # a path 0-1-2 with two leaves 3 and 4 hanging off vertex 2.
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


# Icosahedron rotation system: for each of the 12 vertices, its 5 neighbours in
# cyclic order around the vertex. 0 = top, 1..5 upper ring, 6..10 lower ring
# (6+k sits below 1+k and 1+(k+1)%5), 11 = bottom.
ICOSAHEDRON_ROTATION: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5),
    (0, 2, 6, 10, 5),
    (0, 3, 7, 6, 1),
    (0, 4, 8, 7, 2),
    (0, 5, 9, 8, 3),
    (0, 1, 10, 9, 4),
    (1, 2, 7, 11, 10),
    (2, 3, 8, 11, 6),
    (3, 4, 9, 11, 7),
    (4, 5, 10, 11, 8),
    (5, 1, 6, 11, 9),
    (6, 7, 8, 9, 10),
)


def _truncate(rotation: Sequence[Sequence[int]]) -> Graph:
    """
    Truncate a polyhedron given by its rotation system.

    Flag (v, i), v's i-th incident edge in rotation order, becomes vertex
    offsets[v] + i. Both flags of an original edge are joined, and so are
    cyclically consecutive flags around each original vertex.
    """
    offsets: List[int] = []
    total = 0
    for nbrs in rotation:
        offsets.append(total)
        total += len(nbrs)

    def flag(v: int, w: int) -> int:
        return offsets[v] + rotation[v].index(w)

    edges = []
    for v, nbrs in enumerate(rotation):
        k = len(nbrs)
        for i, w in enumerate(nbrs):
            if v < w:
                edges.append((flag(v, w), flag(w, v)))
            edges.append((offsets[v] + i, offsets[v] + (i + 1) % k))
    return Graph.from_edges(total, edges)


def _c60_truncated_icosahedron() -> Graph:
    return _truncate(ICOSAHEDRON_ROTATION)


# ===================== registry =====================

@dataclass(frozen=True)
class FamilySpec:
    builder: Callable[..., Graph]
    arity: int
    description: str


FAMILIES: Dict[str, FamilySpec] = {
    "complete": FamilySpec(_complete, 1, "complete graph K_n"),
    "cycle": FamilySpec(_cycle, 1, "cycle C_n (n >= 3)"),
    "path": FamilySpec(_path, 1, "path P_n"),
    "star": FamilySpec(_star, 1, "star K_{1,n-1} on n vertices"),
    "chemical_tree_fig1": FamilySpec(_chemical_tree_fig1, 0, "5-vertex chemical tree"),
    "c60_truncated_icosahedron": FamilySpec(_c60_truncated_icosahedron, 0, "buckminsterfullerene C60"),
}

ALIASES: Dict[str, str] = {
    "c60": "c60_truncated_icosahedron",
    "tree5": "chemical_tree_fig1",
    "chemical_tree": "chemical_tree_fig1",
}


def parametric_families() -> List[str]:
    return sorted(name for name, spec in FAMILIES.items() if spec.arity == 1)


def resolve_family_name(name: str) -> str:
    tag = ALIASES.get(name.lower(), name.lower())
    if tag not in FAMILIES:
        known = ", ".join(sorted(FAMILIES) + sorted(ALIASES))
        raise GraphFamilyError(f"unknown family {name!r} (known: {known})")
    return tag


def parse_family(name: str, params: Sequence[str] = ()) -> GraphFamily:
    """Build a GraphFamily from command-line words, e.g. ('cycle', ['6'])."""
    tag = resolve_family_name(name)
    spec = FAMILIES[tag]
    if len(params) != spec.arity:
        raise GraphFamilyError(f"{tag} takes {spec.arity} parameter(s), got {len(params)}")
    try:
        values = tuple(int(p) for p in params)
    except ValueError:
        raise GraphFamilyError(f"{tag} parameters must be integers, got {list(params)}") from None
    return GraphFamily(tag=tag, params=values)


def generate(family: GraphFamily) -> Graph:
    spec = FAMILIES.get(family.tag)
    if spec is None:
        raise GraphFamilyError(f"unknown family {family.tag!r}")
    if len(family.params) != spec.arity:
        raise GraphFamilyError(f"{family.tag} takes {spec.arity} parameter(s), got {len(family.params)}")
    g = spec.builder(*family.params)
    logger.debug("[Generate] %s -> n=%d m=%d", family.label(), g.n, g.m)
    return g
