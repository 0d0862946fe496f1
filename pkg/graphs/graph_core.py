# graph_core.py
# Simple undirected graphs: construction, the GraphFile text format, connectivity.
#
# GraphFile:
#   line 1      "<n> <m>"
#   next m      "<u> <v>"  with 0 <= u < v < n
#   "\n" endings, one trailing newline when serialized

from __future__ import annotations

import hashlib
import logging
import sys
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class GraphError(Exception):
    """Base error for everything under graphs/."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    edges is canonical: each pair once, (smaller, larger), sorted.
    Build through Graph.from_edges unless the edge tuple is already canonical.
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted; use Graph.from_edges")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        canonical = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            pair = (u, v) if u < v else (v, u)
            if pair in canonical:
                raise GraphError(f"duplicate edge {pair}")
            canonical.add(pair)
        return cls(n=n, edges=tuple(sorted(canonical)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> List[List[int]]:
        """Sorted neighbour list per vertex."""
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


# ---------------- GraphFile text format ---------------- #

def _parse_int(token: str, line_no: int) -> int:
    if not (token.isascii() and token.isdigit()):
        raise GraphParseError(f"expected a non-negative decimal integer, got {token!r}", line_no)
    return int(token)


def parse_graph(text: str) -> Graph:
    """Parse GraphFile text. Errors carry the 1-based line number."""
    lines = text.split("\n")
    # tolerate trailing blank lines only
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphParseError("empty input, missing '<n> <m>' header", 1)

    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError(f"malformed header {lines[0].strip()!r}, expected '<n> <m>'", 1)
    n = _parse_int(header[0], 1)
    m = _parse_int(header[1], 1)
    if n < 1:
        raise GraphParseError("vertex count must be positive", 1)

    body = lines[1:]
    if len(body) != m:
        # first surplus line, or the line where the missing edge should be
        bad_line = m + 2 if len(body) > m else len(lines) + 1
        raise GraphParseError(
            f"header declares {m} edges but {len(body)} edge lines follow", bad_line
        )

    seen = set()
    for offset, raw in enumerate(body):
        line_no = offset + 2
        parts = raw.split()
        if len(parts) != 2:
            raise GraphParseError(f"malformed edge line {raw.strip()!r}, expected '<u> <v>'", line_no)
        u = _parse_int(parts[0], line_no)
        v = _parse_int(parts[1], line_no)
        if u >= n or v >= n:
            raise GraphParseError(f"vertex index out of range [0, {n}) in edge ({u}, {v})", line_no)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line_no)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise GraphParseError(f"duplicate edge {pair}", line_no)
        seen.add(pair)

    return Graph(n=n, edges=tuple(sorted(seen)))


def serialize_graph(g: Graph) -> str:
    """Canonical GraphFile text (edges sorted, single trailing newline)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_graph_file(path: str) -> Graph:
    """Read a GraphFile from disk, or from standard input when path is '-'."""
    if path == "-":
        return parse_graph(sys.stdin.read())
    text = Path(path).read_text(encoding="utf-8")
    g = parse_graph(text)
    logger.debug("[GraphFile] read %s: n=%d m=%d", path, g.n, g.m)
    return g


def write_graph_file(g: Graph, path: Optional[str] = None) -> None:
    """Write canonical GraphFile text to path, or to standard output when path is None or '-'."""
    text = serialize_graph(g)
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    # newline="" keeps "\n" endings on every platform
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("[GraphFile] wrote %s (n=%d, m=%d)", out, g.n, g.m)


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode("utf-8")).hexdigest()


# ---------------- structure ---------------- #

def is_connected(g: Graph) -> bool:
    """BFS from vertex 0 reaches every vertex (true for n=1)."""
    adj = g.adjacency()
    visited = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in visited:
                visited.add(w)
                queue.append(w)
    return len(visited) == g.n


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges)
    return graph


def planar_face_sizes(g: Graph) -> List[int]:
    """
    Face lengths of a planar embedding, sorted ascending.

    For 3-connected planar graphs the embedding is unique, so the multiset
    is a graph invariant (e.g. 12 fives and 20 sixes for C60).
    """
    is_planar, embedding = nx.check_planarity(to_networkx(g))
    if not is_planar:
        raise GraphError("graph is not planar")
    visited = set()
    sizes = []
    for u, v in embedding.edges():
        if (u, v) in visited:
            continue
        face = embedding.traverse_face(u, v, mark_half_edges=visited)
        sizes.append(len(face))
    return sorted(sizes)
