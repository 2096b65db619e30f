"""Homotopy-type classification from the shape of a gradient field.

Three sufficient conditions are tried in order; each one pins the complex
down as collapsible or as a wedge of spheres with one sphere per critical
simplex of positive dimension.  When none applies the result is honestly
Unclassified rather than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, is_maximal
from .graph_core import Graph, domination_number
from .homology import HomologyProfile
from .matching import (
    critical_simplices,
    generalized_vpath_reachable,
    verify_acyclic,
    verify_matching,
)
from .morse import ConstructionResult


@dataclass(frozen=True)
class HomotopyType:
    """Outcome of the classification.

    kind is "collapsible", "wedge", or "unclassified".  For a wedge the
    counts tuple lists the number of spheres per dimension starting at 0;
    reason explains an unclassified verdict.
    """

    kind: str
    wedge: tuple[int, ...] = ()
    reason: str = ""

    def __post_init__(self):
        if self.kind not in ("collapsible", "wedge", "unclassified"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "wedge" and not any(self.wedge):
            raise ValueError("a wedge needs at least one sphere")


def _wedge(counts: list[int]) -> HomotopyType:
    trimmed = list(counts)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    return HomotopyType("wedge", tuple(trimmed))


def classify(x: SimplicialComplex, result: ConstructionResult) -> HomotopyType:
    """Classify the homotopy type read off an acyclic matching on x."""
    if not verify_matching(x, result.pairs):
        raise ValueError("pairs do not form a matching on this complex")
    if not verify_acyclic(x, result.pairs):
        raise ValueError("matching is not acyclic")
    critical, fvec = critical_simplices(x, result.pairs)
    if critical != result.critical_set or fvec != result.critical_f:
        raise ValueError("result does not describe its own matching")
    total = sum(fvec)
    if total == 0:
        raise ValueError("a nonempty complex has at least one critical simplex")

    non_maximal = [s for s in critical if not is_maximal(x, s)]
    if not non_maximal or (
        len(non_maximal) == 1 and non_maximal[0].bit_count() == 1
    ):
        if total == 1:
            return HomotopyType("collapsible")
        counts = [fvec[0] - 1] + list(fvec[1:])
        return _wedge(counts)

    if len(fvec) >= 2 and fvec[0] == 1 and all(c == 0 for c in fvec[1:-1]):
        return _wedge([0] * (len(fvec) - 1) + [fvec[-1]])

    if fvec[0] == 1:
        zero = next(s for s in critical if s.bit_count() == 1)
        higher = [s for s in critical if s.bit_count() >= 2]
        if higher and all(
            generalized_vpath_reachable(x, result.pairs, s) <= {s, zero}
            for s in higher
        ):
            return _wedge([0] + list(fvec[1:]))

    return HomotopyType(
        "unclassified",
        reason=(
            "several critical simplices are non-maximal and the descending "
            "path test failed"
        ),
    )


def check_domination_bound(g: Graph, h: HomotopyType) -> bool:
    """Every sphere in a wedge has dimension at least the domination number
    of the graph minus one.  Collapsible complexes pass vacuously."""
    if h.kind == "collapsible":
        return True
    if h.kind != "wedge":
        raise ValueError("bound applies to classified types only")
    low = next(d for d, c in enumerate(h.wedge) if c)
    return low >= domination_number(g) - 1


def consistency_with_homology(h: HomotopyType, profile: HomologyProfile) -> bool:
    """Check the classified type against independently computed homology.

    Unclassified types return False: there is nothing to confirm.
    """
    if h.kind == "unclassified":
        return False
    if not all(profile.torsion_free):
        return False
    if h.kind == "collapsible":
        expect = (1,) + (0,) * (len(profile.betti) - 1)
        return profile.betti == expect
    expect_list = [h.wedge[0] + 1] + list(h.wedge[1:])
    top = max(len(expect_list), len(profile.betti))
    expect_list += [0] * (top - len(expect_list))
    betti = list(profile.betti) + [0] * (top - len(profile.betti))
    return betti == expect_list
