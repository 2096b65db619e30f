"""Explicit independence complexes.

A simplex is an int bitmask over the ambient vertices; the empty simplex 0
is a first-class member of every complex (dimension -1).  The construction
pairs the empty simplex like any other face, so it is never special-cased
away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph_core import EXPLICIT_VERTEX_CAP, CapabilityError, Graph, bits


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of bitmask simplices containing 0."""

    n: int
    faces: frozenset[int]

    def __post_init__(self):
        if 0 not in self.faces:
            raise ValueError("a complex must contain the empty simplex")

    @staticmethod
    def from_simplices(n: int, simplices) -> "SimplicialComplex":
        """Build from an explicit family, checking downward closure."""
        faces = frozenset(simplices) | {0}
        for sigma in faces:
            if sigma & ~((1 << n) - 1):
                raise ValueError("simplex out of ambient range")
            for v in bits(sigma):
                if sigma & ~(1 << v) not in faces:
                    raise ValueError(
                        f"family is not downward closed at {sorted(bits(sigma))}"
                    )
        return SimplicialComplex(n, faces)

    def dim(self) -> int:
        """Largest simplex dimension; -1 for the complex {0}."""
        return max(s.bit_count() for s in self.faces) - 1

    def simplices_of_dim(self, d: int) -> list[int]:
        """Sorted list of the d-dimensional simplices."""
        return sorted(s for s in self.faces if s.bit_count() == d + 1)


def _independent_sets(adj: tuple[int, ...], mask: int) -> Iterator[int]:
    """All independent subsets of ``mask``, branching on the highest vertex.

    The highest vertex is either excluded, or included with all of its
    neighbors excluded.
    """
    if mask == 0:
        yield 0
        return
    v = mask.bit_length() - 1
    rest = mask & ~(1 << v)
    yield from _independent_sets(adj, rest)
    bit = 1 << v
    for s in _independent_sets(adj, rest & ~adj[v]):
        yield s | bit


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex of all independent sets of g, including the empty one."""
    if g.n > EXPLICIT_VERTEX_CAP:
        raise CapabilityError(
            f"explicit complexes are limited to {EXPLICIT_VERTEX_CAP} vertices"
        )
    return SimplicialComplex(g.n, frozenset(_independent_sets(g.adj, g.full_mask)))


def f_vector(x: SimplicialComplex) -> tuple[int, ...]:
    """Counts of d-simplices for d = 0..dim(x); empty for the complex {0}."""
    top = x.dim()
    if top < 0:
        return ()
    counts = [0] * (top + 1)
    for s in x.faces:
        if s:
            counts[s.bit_count() - 1] += 1
    return tuple(counts)


def is_maximal(x: SimplicialComplex, sigma: int) -> bool:
    """True iff sigma has no proper coface in x."""
    if sigma not in x.faces:
        raise ValueError("simplex does not belong to the complex")
    # Downward closure means any strict superset yields a one-vertex extension.
    for w in range(x.n):
        bit = 1 << w
        if not sigma & bit and (sigma | bit) in x.faces:
            return False
    return True


def hasse_edges(x: SimplicialComplex) -> list[tuple[int, int]]:
    """All codimension-1 pairs (beta, alpha) with alpha a facet of beta.

    Includes (singleton, 0) edges.  Sorted by (dim, beta, alpha) so output
    order is reproducible.
    """
    out = []
    for beta in x.faces:
        for v in bits(beta):
            out.append((beta, beta & ~(1 << v)))
    out.sort(key=lambda e: (e[0].bit_count(), e[0], e[1]))
    return out


def partition_check(g: Graph, v: int) -> bool:
    """Check the four-block partition of I(G) induced by a vertex v whose
    neighborhood is a clique.

    Blocks: (1) the union over u in N(v) of I(G - N[u]); (2) the rest of
    I(G - N[v]); (3) the u-extensions of each I(G - N[u]); (4) the
    v-extensions of I(G - N[v]).  Returns True iff the blocks are pairwise
    disjoint, the u-extension blocks are mutually disjoint, their union is
    all of I(G), and block 1 sits inside I(G - v).
    """
    g._check_vertex(v)
    nv = g.adj[v]
    if nv == 0:
        raise ValueError("v must not be isolated")
    for u in bits(nv):
        if nv & ~(g.adj[u] | 1 << u):
            raise ValueError("the open neighborhood of v must be a clique")
    full = g.full_mask
    all_faces = set(_independent_sets(g.adj, full))
    sub_v = set(_independent_sets(g.adj, full & ~(g.adj[v] | 1 << v)))
    block1: set[int] = set()
    block3: set[int] = set()
    for u in bits(nv):
        sub_u = set(_independent_sets(g.adj, full & ~(g.adj[u] | 1 << u)))
        block1 |= sub_u
        ext_u = {a | 1 << u for a in sub_u}
        if block3 & ext_u:
            return False
        block3 |= ext_u
    block2 = sub_v - block1
    block4 = {a | 1 << v for a in sub_v}
    blocks = [block1, block2, block3, block4]
    for i in range(4):
        for j in range(i + 1, 4):
            if blocks[i] & blocks[j]:
                return False
    if block1 | block2 | block3 | block4 != all_faces:
        return False
    minus_v = set(_independent_sets(g.adj, full & ~(1 << v)))
    return block1 <= minus_v
