"""Immutable bitset graphs and the neighborhood, clique and domination primitives.

Vertices are dense integers 0..n-1.  Every vertex set, including adjacency
rows, is a plain int used as a bitmask, so set algebra is bitwise arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

# Explicit complexes grow exponentially in the vertex count; this cap keeps
# desk-scale runs in memory.  Count-only code paths are not subject to it.
EXPLICIT_VERTEX_CAP = 32
# Domination number is found by exhaustive subset search.
DOMINATION_VERTEX_CAP = 24


class CapabilityError(Exception):
    """An input exceeds a documented size gate."""


class UnsupportedGraphError(Exception):
    """The simplicial-vertex recursion cannot proceed on this graph.

    ``vertices`` names the offending induced subgraph (original vertex ids).
    """

    def __init__(self, message: str, vertices: tuple[int, ...] = ()):
        super().__init__(message)
        self.vertices = tuple(vertices)


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with bitmask adjacency rows.

    ``labels`` optionally assigns a grid cell (i, j) to every vertex.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row of {v} mentions unknown vertices")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {w})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match vertex count")

    @staticmethod
    def from_edges(n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        lab = None if labels is None else tuple((int(i), int(j)) for i, j in labels)
        return Graph(n, tuple(adj), lab)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")


def closed_neighborhood(g: Graph, v: int) -> int:
    """N[v] as a bitmask: v together with its neighbors."""
    g._check_vertex(v)
    return g.adj[v] | 1 << v


def is_clique(g: Graph, s: int) -> bool:
    """True iff every unordered pair inside the vertex set ``s`` is an edge."""
    if s & ~g.full_mask:
        raise ValueError("vertex set out of range")
    for v in bits(s):
        if s & ~(g.adj[v] | 1 << v):
            return False
    return True


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the closed neighborhood of v is a clique."""
    return is_clique(g, closed_neighborhood(g, v))


def universal_vertices(g: Graph) -> int:
    """Bitmask of vertices adjacent to every other vertex."""
    full = g.full_mask
    out = 0
    for v in range(g.n):
        if (g.adj[v] | 1 << v) == full:
            out |= 1 << v
    return out


def induced_delete(g: Graph, u: int) -> tuple[Graph, tuple[int, ...]]:
    """Delete the vertex set ``u``; return the relabeled subgraph and an id map.

    The id map sends each new vertex id to its original id.
    """
    if u & ~g.full_mask:
        raise ValueError("vertex set out of range")
    keep = g.full_mask & ~u
    old_ids = tuple(bits(keep))
    pos = {old: new for new, old in enumerate(old_ids)}
    adj = []
    for old in old_ids:
        row = 0
        for w in bits(g.adj[old] & keep):
            row |= 1 << pos[w]
        adj.append(row)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in old_ids)
    return Graph(len(old_ids), tuple(adj), labels), old_ids


def connected_components(g: Graph) -> list[int]:
    """Partition of the vertices into components, one bitmask each."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grow = 0
            for w in bits(frontier):
                grow |= g.adj[w]
            frontier = grow & ~comp
            comp |= grow
        out.append(comp)
        seen |= comp
    return out


def _dominates(closed: list[int], subset, full: int) -> bool:
    cover = 0
    for v in subset:
        cover |= closed[v]
    return cover == full


def domination_number(g: Graph) -> int:
    """Exact domination number by increasing-cardinality exhaustive search."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.n > DOMINATION_VERTEX_CAP:
        raise CapabilityError(
            f"domination search is limited to {DOMINATION_VERTEX_CAP} vertices"
        )
    full = g.full_mask
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    # Isolated vertices dominate only themselves, so they sit in every
    # dominating set; search over the rest.
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    base = 0
    for v in isolated:
        base |= 1 << v
    others = [v for v in range(g.n) if g.adj[v] != 0]
    if base == full:
        return len(isolated)
    for extra in range(1, len(others) + 1):
        for subset in combinations(others, extra):
            cover = base
            for v in subset:
                cover |= closed[v]
            if cover == full:
                return len(isolated) + extra
    raise AssertionError("the full vertex set always dominates")


def graph_to_json(g: Graph) -> dict:
    """Graph as a JSON-ready dict: {"n", "edges", "labels" (optional)}."""
    obj: dict = {"n": g.n, "edges": g.edges()}
    if g.labels is not None:
        obj["labels"] = [list(lab) for lab in g.labels]
    return obj


def graph_from_json(obj: dict) -> Graph:
    """Parse the dict form produced by :func:`graph_to_json`."""
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON must contain "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError('"n" must be a nonnegative integer')
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError(f"malformed edge {e!r}")
        edges.append((int(e[0]), int(e[1])))
    labels = obj.get("labels")
    if labels is not None:
        labels = [tuple(lab) for lab in labels]
    return Graph.from_edges(n, edges, labels)
