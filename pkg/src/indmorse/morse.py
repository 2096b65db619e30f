"""Recursive construction of acyclic matchings on independence complexes.

The single-step extension takes a simplicial, non-universal vertex v and one
sub-matching per non-universal neighbor u (built on I(G - N[u])), and
assembles a matching on I(G):

  (i)   every sub-pair (alpha, beta) with alpha nonempty lifts to
        (alpha + u, beta + u);
  (ii)  each u with G - N[u] nonempty is paired as ({u}, {u, x_u}) for a
        chosen critical 0-simplex {x_u} of its sub-matching;
  (iii) every alpha in I(G - N[v]) is paired with alpha + v, including
        (empty, {v}).

The critical simplices are then {v}, the singletons of universal vertices,
and every lifted sub-critical simplex except the chosen {x_u}.  Three
drivers run this step to exhaustion: one for chordal graphs (v = head of a
perfect elimination ordering), one for labeled grid-family graphs (v taken
from the corner cell), and a generic one (v = smallest simplicial vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .chordal import _mcs_masked, is_chordal
from .complexes import SimplicialComplex, _independent_sets
from .generators import GridSpec, grid_spec_from_labels
from .graph_core import (
    EXPLICIT_VERTEX_CAP,
    CapabilityError,
    Graph,
    UnsupportedGraphError,
    bits,
)
from .matching import critical_fvector_of, verify_acyclic, verify_matching

Pair = tuple[int, int]


@dataclass(frozen=True)
class ConstructionResult:
    """An acyclic matching on I(G) together with its critical data.

    ``special_zero`` is the one critical 0-simplex that may fail to be
    maximal (the {v} of the outermost extension step); None when every
    critical simplex is maximal by construction.
    """

    pairs: tuple[Pair, ...]
    critical_set: frozenset[int]
    critical_f: tuple[int, ...]
    special_zero: int | None
    driver: str

    def total_critical(self) -> int:
        return len(self.critical_set)


def _check_cap(g: Graph) -> None:
    if g.n > EXPLICIT_VERTEX_CAP:
        raise CapabilityError(
            f"explicit construction is limited to {EXPLICIT_VERTEX_CAP} vertices"
        )


def _result(pairs, critical, special_zero, driver) -> ConstructionResult:
    return ConstructionResult(
        pairs=tuple(pairs),
        critical_set=frozenset(critical),
        critical_f=critical_fvector_of(critical),
        special_zero=special_zero,
        driver=driver,
    )


def _scoped_isolated(g: Graph, mask: int, v: int, driver: str) -> ConstructionResult:
    # Pairing every simplex avoiding v with its v-extension collapses the
    # cone; only {v} (paired with the empty simplex) stays critical.
    bit = 1 << v
    pairs = [(a, a | bit) for a in _independent_sets(g.adj, mask & ~bit)]
    return _result(pairs, [bit], bit, driver)


def _scoped_complete(g: Graph, mask: int, driver: str) -> ConstructionResult:
    critical = [1 << v for v in bits(mask)]
    return _result([], critical, None, driver)


def _is_universal_in(g: Graph, v: int, mask: int) -> bool:
    return (g.adj[v] | 1 << v) & mask == mask


def _choose_xu(g: Graph, child_mask: int, child: ConstructionResult) -> int:
    """Pick the 0-simplex paired against {u}.

    Prefer the child's special 0-simplex when it is non-maximal in the child
    complex (a 0-simplex is maximal there exactly when its vertex is
    universal in the child graph); otherwise take the smallest-id critical
    0-simplex.
    """
    sz = child.special_zero
    if sz is not None and sz in child.critical_set:
        if not _is_universal_in(g, sz.bit_length() - 1, child_mask):
            return sz
    zeros = [s for s in child.critical_set if s.bit_count() == 1]
    if not zeros:
        raise ValueError("sub-matching has no critical 0-simplex")
    return min(zeros)


def _scoped_extend(
    g: Graph,
    mask: int,
    v: int,
    children: Mapping[int, ConstructionResult],
    driver: str,
) -> ConstructionResult:
    bit_v = 1 << v
    pairs: list[Pair] = []
    critical: list[int] = [bit_v]
    for u in bits(g.adj[v] & mask):
        bit_u = 1 << u
        mask_u = mask & ~(g.adj[u] | bit_u)
        if mask_u == 0:
            # u is universal inside this subgraph; {u} stays critical.
            critical.append(bit_u)
            continue
        child = children[u]
        xu = _choose_xu(g, mask_u, child)
        for a, b in child.pairs:
            if a:
                pairs.append((a | bit_u, b | bit_u))
        pairs.append((bit_u, bit_u | xu))
        for c in child.critical_set:
            if c != xu:
                critical.append(c | bit_u)
    rest = mask & ~(g.adj[v] | bit_v)
    for a in _independent_sets(g.adj, rest):
        pairs.append((a, a | bit_v))
    return _result(pairs, critical, bit_v, driver)


def match_isolated(g: Graph, v: int) -> ConstructionResult:
    """Collapse I(G) along an isolated vertex; {v} is the only critical simplex."""
    g._check_vertex(v)
    _check_cap(g)
    if g.adj[v] != 0:
        raise ValueError(f"vertex {v} is not isolated")
    return _scoped_isolated(g, g.full_mask, v, "isolated")


def match_complete(g: Graph) -> ConstructionResult:
    """Empty matching on the complex of a complete graph: n critical points."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    full = g.full_mask
    for v in range(g.n):
        if (g.adj[v] | 1 << v) != full:
            raise ValueError("graph is not complete")
    return _scoped_complete(g, full, "complete")


def extend_matching(
    g: Graph, v: int, sub: Mapping[int, ConstructionResult]
) -> ConstructionResult:
    """One extension step on the full graph, validating the sub-matchings.

    ``sub`` must supply, for every non-universal u in N(v), an acyclic
    matching on I(G - N[u]) expressed in original vertex ids.
    """
    g._check_vertex(v)
    _check_cap(g)
    nv = g.adj[v]
    if nv == 0:
        raise ValueError("v must not be isolated")
    if (nv | 1 << v) == g.full_mask:
        raise ValueError("v must not be universal")
    for u in bits(nv):
        if nv & ~(g.adj[u] | 1 << u):
            raise ValueError("v must be simplicial")
    full = g.full_mask
    checked: dict[int, ConstructionResult] = {}
    for u in bits(nv):
        mask_u = full & ~(g.adj[u] | 1 << u)
        if mask_u == 0:
            continue
        if u not in sub:
            raise ValueError(f"missing sub-matching for neighbor {u}")
        x_u = SimplicialComplex(g.n, frozenset(_independent_sets(g.adj, mask_u)))
        if not verify_matching(x_u, sub[u].pairs) or not verify_acyclic(
            x_u, sub[u].pairs
        ):
            raise ValueError(f"sub-matching for neighbor {u} is invalid")
        checked[u] = sub[u]
    return _scoped_extend(g, full, v, checked, "extend")


def _select_chordal(g: Graph, mask: int):
    for v in bits(mask):
        if g.adj[v] & mask == 0:
            return "isolated", v
    for v in bits(mask):
        if (g.adj[v] | 1 << v) & mask != mask:
            break
    else:
        return "complete", None
    head = _mcs_masked(g.adj, mask)[0]
    return "extend", head


def _select_auto(g: Graph, mask: int):
    for v in bits(mask):
        if g.adj[v] & mask == 0:
            return "isolated", v
    for v in bits(mask):
        if (g.adj[v] | 1 << v) & mask != mask:
            break
    else:
        return "complete", None
    for v in bits(mask):
        nv = g.adj[v] & mask
        if all(nv & ~(g.adj[u] | 1 << u) == 0 for u in bits(nv)):
            return "extend", v
    raise UnsupportedGraphError(
        "no simplicial vertex in the induced subgraph on "
        f"{sorted(bits(mask))}",
        tuple(bits(mask)),
    )


def _recurse(g: Graph, mask: int, select, memo: dict, trace, driver: str):
    if mask in memo:
        return memo[mask]
    if mask == 0:
        node = _result([], [], None, driver)
        memo[mask] = node
        if trace is not None:
            trace[mask] = {"rule": "empty", "v": None, "children": {}, "result": node}
        return node
    rule, v = select(g, mask)
    children: dict[int, ConstructionResult] = {}
    child_masks: dict[int, int] = {}
    if rule == "isolated":
        node = _scoped_isolated(g, mask, v, driver)
    elif rule == "complete":
        node = _scoped_complete(g, mask, driver)
    else:
        for u in bits(g.adj[v] & mask):
            mask_u = mask & ~(g.adj[u] | 1 << u)
            if mask_u == 0:
                continue
            children[u] = _recurse(g, mask_u, select, memo, trace, driver)
            child_masks[u] = mask_u
        node = _scoped_extend(g, mask, v, children, driver)
    memo[mask] = node
    if trace is not None:
        trace[mask] = {"rule": rule, "v": v, "children": child_masks, "result": node}
    return node


def build_chordal_matching(g: Graph, trace: dict | None = None) -> ConstructionResult:
    """Recursive matching for a chordal graph; v is always a PEO head."""
    _check_cap(g)
    if not is_chordal(g):
        raise ValueError("graph is not chordal")
    if g.n == 0:
        return _result([], [], None, "chordal")
    return _recurse(g, g.full_mask, _select_chordal, {}, trace, "chordal")


def build_auto(g: Graph, trace: dict | None = None) -> ConstructionResult:
    """Generic driver: recurse on the smallest simplicial vertex at each stage."""
    _check_cap(g)
    if g.n == 0:
        return _result([], [], None, "auto")
    return _recurse(g, g.full_mask, _select_auto, {}, trace, "auto")


def build_grid_matching(
    g: Graph, spec: GridSpec, trace: dict | None = None
) -> ConstructionResult:
    """Driver for labeled grid-family graphs.

    Recursion follows the corner cell (m, 0) of each remaining upper-left
    rectangle of cells; deleting N[u] of a neighbor in column 0 or in the
    top row leaves another such rectangle, which is where memoization pays
    off.
    """
    _check_cap(g)
    derived = grid_spec_from_labels(g)
    if derived != spec:
        raise ValueError("labels are inconsistent with the given grid spec")
    m, n = spec.m, spec.n
    cell_mask: dict[tuple[int, int], int] = {}
    for vtx, lab in enumerate(g.labels):
        cell_mask[lab] = cell_mask.get(lab, 0) | 1 << vtx
    rect_cache: dict[tuple[int, int], int] = {}

    def rect_mask(a: int, b: int) -> int:
        # Cells (r, s) with r <= a and s >= b.
        key = (a, b)
        if key not in rect_cache:
            out = 0
            for r in range(a + 1):
                for s in range(b, n + 1):
                    out |= cell_mask[(r, s)]
            rect_cache[key] = out
        return rect_cache[key]

    memo: dict[int, ConstructionResult] = {}

    def build_rect(a: int, b: int) -> ConstructionResult:
        mask = rect_mask(a, b)
        if mask in memo:
            return memo[mask]
        if a == 0 or b == n:
            node = _scoped_complete(g, mask, "grid")
            rule, v = "complete", None
            child_masks: dict[int, int] = {}
        else:
            v = min(bits(cell_mask[(a, b)]))
            children: dict[int, ConstructionResult] = {}
            child_masks = {}
            for u in bits(g.adj[v] & mask):
                mask_u = mask & ~(g.adj[u] | 1 << u)
                if mask_u == 0:
                    continue
                i, j = g.labels[u]
                if j == b:
                    ca, cb = i - 1, b + 1
                else:
                    ca, cb = a - 1, j + 1
                if mask_u != rect_mask(ca, cb):
                    raise ValueError("labels are inconsistent with the grid recursion")
                children[u] = build_rect(ca, cb)
                child_masks[u] = mask_u
            node = _scoped_extend(g, mask, v, children, "grid")
            rule = "extend"
        memo[mask] = node
        if trace is not None:
            trace[mask] = {
                "rule": rule,
                "v": v,
                "children": child_masks,
                "result": node,
            }
        return node

    return build_rect(m, 0)
