"""Matching validity, acyclicity, critical simplices, generalized paths."""

import random

import pytest

from indmorse import (
    extend_matching,
    build_chordal_matching,
    check_acyclic,
    check_matching,
    critical_fvector_of,
    critical_simplices,
    f_vector,
    generalized_vpath_reachable,
    hasse_edges,
    independence_complex,
    match_isolated,
    random_chordal,
    standard_graph,
    verify_acyclic,
    verify_matching,
    Graph,
)
from oracles import acyclic_by_reachability, closure_complex

P3 = standard_graph("path", 3)
XP3 = independence_complex(P3)
TRIANGLE_RIM = closure_complex(3, [0b011, 0b101, 0b110])
CYCLIC_FIELD = [(0b001, 0b011), (0b010, 0b110), (0b100, 0b101)]


def test_verify_matching_examples():
    assert verify_matching(XP3, [])
    assert verify_matching(XP3, [(0, 0b010), (0b001, 0b101)])
    assert not verify_matching(XP3, [(0b001, 0b101), (0b100, 0b101)])
    assert not verify_matching(XP3, [(0b001, 0b001)])
    assert not verify_matching(XP3, [(0b010, 0b101)])
    assert not verify_matching(XP3, [(0b001, 0b011)])


def test_check_matching_diagnoses_shared_simplex():
    ok, message = check_matching(XP3, [(0b001, 0b101), (0b100, 0b101)])
    assert not ok and "[0, 2]" in message


def test_verify_acyclic_trivial_matchings():
    assert verify_acyclic(XP3, [])
    for edge in hasse_edges(XP3):
        beta, alpha = edge
        assert verify_acyclic(XP3, [(alpha, beta)])


def test_triangle_rim_cyclic_field_is_rejected():
    assert verify_matching(TRIANGLE_RIM, CYCLIC_FIELD)
    assert not verify_acyclic(TRIANGLE_RIM, CYCLIC_FIELD)


def test_check_acyclic_reports_a_genuine_alternating_cycle():
    ok, cycle = check_acyclic(TRIANGLE_RIM, CYCLIC_FIELD)
    assert not ok
    assert len(cycle) % 2 == 1 and cycle[0] == cycle[-1]
    up = dict(CYCLIC_FIELD)
    for k in range(0, len(cycle) - 1, 2):
        a, b = cycle[k], cycle[k + 1]
        assert up[a] == b
        nxt = cycle[k + 2]
        assert nxt != a and nxt & ~b == 0 and (b ^ nxt).bit_count() == 1


def test_check_acyclic_rejects_invalid_matchings():
    with pytest.raises(ValueError):
        check_acyclic(XP3, [(0b001, 0b001)])


def test_critical_simplices_examples():
    xk3 = independence_complex(standard_graph("complete", 3))
    crit, fvec = critical_simplices(xk3, [])
    assert crit == frozenset({1, 2, 4}) and fvec == (3,)

    res = match_isolated(Graph.from_edges(4, [(0, 1), (1, 2)]), 3)
    crit, fvec = critical_simplices(independence_complex(res_graph()), res.pairs)
    assert crit == frozenset({0b1000}) and fvec == (1,)

    res = extend_matching(P3, 0, {})
    crit, fvec = critical_simplices(XP3, res.pairs)
    assert crit == frozenset({0b001, 0b010}) and fvec == (2,)

    res = build_chordal_matching(P3)
    crit, fvec = critical_simplices(XP3, res.pairs)
    assert crit == res.critical_set and fvec == (2,)


def res_graph():
    return Graph.from_edges(4, [(0, 1), (1, 2)])


def test_empty_pair_keeps_its_simplex_critical():
    crit, fvec = critical_simplices(XP3, [(0, 0b001)])
    assert 0b001 in crit and fvec == (3, 1)


def test_critical_fvector_of_trims_trailing_zeros():
    assert critical_fvector_of([]) == ()
    assert critical_fvector_of([0b1, 0b10]) == (2,)
    assert critical_fvector_of([0b11]) == (0, 1)
    assert critical_fvector_of([0b1, 0b111]) == (1, 0, 1)


def test_generalized_vpath_examples():
    assert generalized_vpath_reachable(XP3, [], 0b101) == frozenset({1, 4})
    p5 = standard_graph("path", 5)
    res = build_chordal_matching(p5)
    x5 = independence_complex(p5)
    zeros = [s for s in res.critical_set if s.bit_count() == 1]
    ones = [s for s in res.critical_set if s.bit_count() == 2]
    assert len(zeros) == 1 and len(ones) == 1
    reach = generalized_vpath_reachable(x5, res.pairs, ones[0])
    assert reach <= {ones[0], zeros[0]}
    with pytest.raises(ValueError):
        generalized_vpath_reachable(x5, res.pairs, next(iter(dict(res.pairs))))


def random_matchings(x, tries, seed):
    rng = random.Random(seed)
    edges = hasse_edges(x)
    for _ in range(tries):
        rng.shuffle(edges)
        used = set()
        pairs = []
        for beta, alpha in edges:
            if beta in used or alpha in used or rng.random() < 0.3:
                continue
            pairs.append((alpha, beta))
            used.update((alpha, beta))
        yield pairs


def test_acyclicity_agrees_with_reachability_oracle():
    graphs = [
        standard_graph("path", 5),
        standard_graph("cycle", 5),
        standard_graph("empty", 3),
        random_chordal(6, 0.4, 2),
    ]
    seen_cyclic = seen_acyclic = 0
    for g in graphs:
        x = independence_complex(g)
        for pairs in random_matchings(x, 40, g.n):
            assert verify_matching(x, pairs)
            got = verify_acyclic(x, pairs)
            assert got == acyclic_by_reachability(x, pairs)
            seen_cyclic += not got
            seen_acyclic += got
    assert seen_cyclic and seen_acyclic
    assert not acyclic_by_reachability(TRIANGLE_RIM, CYCLIC_FIELD)


def test_construction_satisfies_euler_and_pointwise_bounds():
    for seed in range(30):
        g = random_chordal(1 + seed % 9, (seed % 4) / 3, seed)
        x = independence_complex(g)
        res = build_chordal_matching(g)
        fv = f_vector(x)
        fcrit = res.critical_f
        assert len(fcrit) <= len(fv)
        assert all(c <= f for c, f in zip(fcrit, fv))
        pad = list(fcrit) + [0] * (len(fv) - len(fcrit))
        euler = sum((-1) ** d * c for d, c in enumerate(fv))
        euler_crit = sum((-1) ** d * c for d, c in enumerate(pad))
        assert euler == euler_crit
