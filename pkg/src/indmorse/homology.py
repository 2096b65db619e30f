"""Independent ground truth: integer simplicial homology and brute-force
optimal matchings.

Nothing here looks at a constructed matching; Betti numbers come from ranks
of boundary matrices (integer elimination for the real thing, GF(2) bitset
elimination as a fast cross-check), and the optimum comes from exhaustive
search over acyclic matchings of tiny complexes.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .complexes import SimplicialComplex, f_vector
from .graph_core import CapabilityError, bits

HOMOLOGY_SIMPLEX_CAP = 50_000
BRUTEFORCE_SIMPLEX_CAP = 14


@dataclass(frozen=True)
class HomologyProfile:
    """Unreduced Betti numbers and per-dimension torsion-freeness flags."""

    betti: tuple[int, ...]
    torsion_free: tuple[bool, ...]


def boundary_matrix(x: SimplicialComplex, d: int):
    """The d-th boundary matrix with signs from the sorted vertex order.

    Returns (rows, cols, cells): rows are the (d-1)-simplices, cols the
    d-simplices (both sorted by bitmask), and cells maps (row index, col
    index) to the entry, omitting zeros.
    """
    top = x.dim()
    if not 1 <= d <= top:
        raise ValueError(f"boundary dimension {d} out of range 1..{top}")
    rows = x.simplices_of_dim(d - 1)
    cols = x.simplices_of_dim(d)
    row_index = {s: i for i, s in enumerate(rows)}
    cells: dict[tuple[int, int], int] = {}
    for c, beta in enumerate(cols):
        sign = 1
        for v in bits(beta):
            cells[(row_index[beta & ~(1 << v)], c)] = sign
            sign = -sign
    return rows, cols, cells


def _columns_of(x: SimplicialComplex, d: int) -> list[dict[int, int]]:
    rows = x.simplices_of_dim(d - 1)
    row_index = {s: i for i, s in enumerate(rows)}
    cols = []
    for beta in x.simplices_of_dim(d):
        col: dict[int, int] = {}
        sign = 1
        for v in bits(beta):
            col[row_index[beta & ~(1 << v)]] = sign
            sign = -sign
        cols.append(col)
    return cols


def _smith_diagonal_dense(mat: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of a small dense integer matrix."""
    mat = [row[:] for row in mat]
    out: list[int] = []
    top = 0
    while True:
        best = None
        for r in range(top, len(mat)):
            for c in range(top, len(mat[0]) if mat else 0):
                e = mat[r][c]
                if e and (best is None or abs(e) < abs(mat[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        r0, c0 = best
        mat[top], mat[r0] = mat[r0], mat[top]
        for row in mat:
            row[top], row[c0] = row[c0], row[top]
        pivot = mat[top][top]
        dirty = False
        for r in range(top + 1, len(mat)):
            q = mat[r][top] // pivot
            if q:
                mat[r] = [a - q * b for a, b in zip(mat[r], mat[top])]
            if mat[r][top]:
                dirty = True
        for c in range(top + 1, len(mat[0])):
            q = mat[top][c] // pivot
            if q:
                for row in mat:
                    row[c] -= q * row[top]
            if mat[top][c]:
                dirty = True
        if dirty:
            continue
        # Pivot must divide every remaining entry for a true SNF diagonal.
        offender = None
        for r in range(top + 1, len(mat)):
            for c in range(top + 1, len(mat[0])):
                if mat[r][c] % pivot:
                    offender = r
                    break
            if offender is not None:
                break
        if offender is not None:
            mat[top] = [a + b for a, b in zip(mat[top], mat[offender])]
            continue
        out.append(abs(pivot))
        top += 1
        if top >= len(mat) or top >= len(mat[0]):
            break
    return out


def _rank_and_factors(cols: list[dict[int, int]], nrows: int) -> tuple[int, list[int]]:
    """Rank over the integers plus all nontrivial invariant factors.

    Sparse elimination with unit pivots chosen by a low-fill heuristic; any
    leftover submatrix without unit entries is finished off densely.
    """
    row_entries: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for c, col in enumerate(cols):
        if col:
            col_rows[c] = set(col)
        for r, val in col.items():
            row_entries.setdefault(r, {})[c] = val
    heap = [(len(cs), len(row_entries[r]), r, c) for c, cs in col_rows.items() for r in cs]
    heapq.heapify(heap)
    rank = 0
    while heap:
        clen, rlen, r0, c0 = heapq.heappop(heap)
        if r0 not in row_entries or c0 not in row_entries.get(r0, {}):
            continue
        if c0 not in col_rows or clen != len(col_rows[c0]) or rlen != len(row_entries[r0]):
            if c0 in col_rows and r0 in row_entries:
                heapq.heappush(
                    heap, (len(col_rows[c0]), len(row_entries[r0]), r0, c0)
                )
            continue
        pivot = row_entries[r0][c0]
        if abs(pivot) != 1:
            # Leave non-unit entries for the dense fallback.
            continue
        rank += 1
        pivot_row = row_entries.pop(r0)
        for c in pivot_row:
            col_rows[c].discard(r0)
        rows_hit = [r for r in col_rows[c0] if r != r0]
        for r in rows_hit:
            factor = row_entries[r][c0] * pivot
            row = row_entries[r]
            for c, val in pivot_row.items():
                new = row.get(c, 0) - factor * val
                if new:
                    if c not in row:
                        col_rows[c].add(r)
                    row[c] = new
                elif c in row:
                    del row[c]
                    col_rows[c].discard(r)
            if not row:
                del row_entries[r]
        for c in pivot_row:
            if c in col_rows and not col_rows[c]:
                del col_rows[c]
        col_rows.pop(c0, None)
        for r in rows_hit:
            if r in row_entries:
                first = next(iter(row_entries[r]))
                heapq.heappush(
                    heap, (len(col_rows[first]), len(row_entries[r]), r, first)
                )
    if not row_entries:
        return rank, []
    live_rows = sorted(row_entries)
    live_cols = sorted({c for row in row_entries.values() for c in row})
    cpos = {c: i for i, c in enumerate(live_cols)}
    dense = [[0] * len(live_cols) for _ in live_rows]
    for i, r in enumerate(live_rows):
        for c, val in row_entries[r].items():
            dense[i][cpos[c]] = val
    diag = _smith_diagonal_dense(dense)
    return rank + len(diag), [e for e in diag if e != 1]


def homology_integer(x: SimplicialComplex) -> HomologyProfile:
    """Unreduced integer homology of the nonempty part of the complex."""
    fv = f_vector(x)
    if sum(fv) > HOMOLOGY_SIMPLEX_CAP:
        raise CapabilityError(
            f"integer homology is limited to {HOMOLOGY_SIMPLEX_CAP} simplices"
        )
    top = len(fv) - 1
    if top < 0:
        return HomologyProfile((), ())
    ranks = [0] * (top + 2)
    nontrivial = [False] * (top + 2)
    for d in range(1, top + 1):
        rank, factors = _rank_and_factors(_columns_of(x, d), fv[d - 1])
        ranks[d] = rank
        nontrivial[d] = bool(factors)
    betti = tuple(fv[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))
    torsion_free = tuple(not nontrivial[d + 1] for d in range(top + 1))
    return HomologyProfile(betti, torsion_free)


def betti_gf2(x: SimplicialComplex) -> tuple[int, ...]:
    """Betti numbers over the two-element field (fast bitset elimination)."""
    fv = f_vector(x)
    if sum(fv) > HOMOLOGY_SIMPLEX_CAP:
        raise CapabilityError(
            f"GF(2) homology is limited to {HOMOLOGY_SIMPLEX_CAP} simplices"
        )
    top = len(fv) - 1
    if top < 0:
        return ()
    ranks = [0] * (top + 2)
    for d in range(1, top + 1):
        pivots: dict[int, int] = {}
        rank = 0
        for col in _columns_of(x, d):
            vec = 0
            for r in col:
                vec |= 1 << r
            while vec:
                low = vec & -vec
                other = pivots.get(low)
                if other is None:
                    pivots[low] = vec
                    rank += 1
                    break
                vec ^= other
        ranks[d] = rank
    return tuple(fv[d] - ranks[d] - ranks[d + 1] for d in range(top + 1))


def optimal_matching_bruteforce(x: SimplicialComplex) -> int:
    """Exact minimum of the total critical count over all acyclic matchings.

    Pairs involving the empty simplex never lower the count (their nonempty
    member stays critical), so the search runs over the nonempty Hasse
    diagram only: minimum = #simplices - 2 * (largest acyclic matching).
    """
    simplices = sorted((s for s in x.faces if s), key=lambda s: (s.bit_count(), s))
    count = len(simplices)
    if count > BRUTEFORCE_SIMPLEX_CAP:
        raise CapabilityError(
            f"brute-force optimum is limited to {BRUTEFORCE_SIMPLEX_CAP} simplices"
        )
    index = {s: i for i, s in enumerate(simplices)}
    neighbors: list[list[int]] = [[] for _ in simplices]
    for i, s in enumerate(simplices):
        for w in range(x.n):
            bit = 1 << w
            if not s & bit and (s | bit) in index:
                j = index[s | bit]
                neighbors[i].append(j)
                neighbors[j].append(i)

    up: dict[int, int] = {}

    def layer_acyclic(layer: int) -> bool:
        color: dict[int, int] = {}

        def visit(a: int) -> bool:
            color[a] = 1
            b = up[a]
            for v in bits(b):
                a2 = b & ~(1 << v)
                if a2 == a or a2 not in up:
                    continue
                st = color.get(a2)
                if st == 1:
                    return False
                if st is None and not visit(a2):
                    return False
            color[a] = 2
            return True

        for a in [m for m in up if m.bit_count() == layer]:
            if color.get(a) is None and not visit(a):
                return False
        return True

    best = count

    def search(pos: int, assigned: int, matched: int) -> None:
        nonlocal best
        remaining = count - assigned.bit_count()
        if count - 2 * (matched + remaining // 2) >= best:
            return
        i = pos
        while i < count and assigned >> i & 1:
            i += 1
        if i == count:
            best = min(best, count - 2 * matched)
            return
        taken = assigned | 1 << i
        for j in neighbors[i]:
            if assigned >> j & 1:
                continue
            a, b = simplices[i], simplices[j]
            if a.bit_count() > b.bit_count():
                a, b = b, a
            up[a] = b
            if layer_acyclic(a.bit_count()):
                search(i + 1, taken | 1 << j, matched + 1)
            del up[a]
        search(i + 1, taken, matched)

    search(0, 0, 0)
    return best
