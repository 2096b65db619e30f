"""Chordality recognition through maximum cardinality search.

A graph is chordal exactly when it admits a perfect elimination ordering
(PEO): an ordering v_1, ..., v_n where the later neighbors of each v_i form
a clique.  Maximum cardinality search emits such an ordering whenever one
exists, so chordality reduces to running MCS and verifying its output.
"""

from __future__ import annotations

from .graph_core import Graph, bits, is_clique


def _mcs_masked(adj: tuple[int, ...], mask: int) -> list[int]:
    """MCS on the subgraph induced by ``mask``; returns the PEO candidate.

    Vertices are numbered from the back: the vertex picked first (highest
    weight, smallest id on ties) comes last in the returned order.
    """
    order: list[int] = []
    weight = {v: 0 for v in bits(mask)}
    unnumbered = mask
    while unnumbered:
        best = -1
        best_w = -1
        for v in bits(unnumbered):
            if weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        unnumbered &= ~(1 << best)
        for w in bits(adj[best] & unnumbered):
            weight[w] += 1
    order.reverse()
    return order


def maximum_cardinality_search(g: Graph) -> tuple[int, ...]:
    """An elimination ordering (first vertex first) that is a PEO iff g is chordal.

    Ties between equal-weight vertices go to the smallest id, so the result
    is deterministic.
    """
    return tuple(_mcs_masked(g.adj, g.full_mask))


def verify_peo(g: Graph, order) -> bool:
    """Check the PEO condition: later neighbors of each vertex form a clique."""
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    later = g.full_mask
    for v in order:
        later &= ~(1 << v)
        if not is_clique(g, g.adj[v] & later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    if g.n == 0:
        return True
    return verify_peo(g, maximum_cardinality_search(g))
