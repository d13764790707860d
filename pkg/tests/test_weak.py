import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from stablegraph.constructions import STAR_K, STAR_LEAVES, chain_graph, star_degenerations, star_graph
from stablegraph.graph import StableGraph, automorphisms, canonical_form, contract_edge, genus
from stablegraph.verify import brute_force_oracle
from stablegraph.weak import (
    ContextMismatchError,
    EdgeBoundError,
    NotFixedPointError,
    WeakParams,
    codimension,
    include_into_larger_k,
    inclusion_inequality,
    index_vector,
    is_phi_fixed,
    is_weak,
    maximal_weak_subgraph,
    part_order_geq,
    phi_map,
    phi_threshold,
    recurrence_table,
    stabilize,
    strong_vertices,
)

P1 = WeakParams(1)
P9 = WeakParams(9)


def edge_graph(a, b, legs=(0, 0)):
    return StableGraph((a, b), legs, [(0, 1)])


LOOP9 = StableGraph((9,), (0,), [(0, 0)])
SMOOTH10 = StableGraph.smooth(10)


@pytest.mark.parametrize("k, L, alpha, beta", [
    (9, 5, Fraction(11, 5), Fraction(11 ** 6, 5 ** 4)),
    (1, 1, Fraction(3), Fraction(9)),
    (2, 2, Fraction(5, 2), Fraction(125, 2)),
    (0, 1, Fraction(3), Fraction(9)),
])
def test_constants_are_exact(k, L, alpha, beta):
    p = WeakParams(k)
    assert (p.L, p.alpha, p.beta) == (L, alpha, beta)
    assert p.alpha == Fraction(1, L) + 2
    assert (p.max_edges, p.max_vertices) == (L, L + 1)


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        WeakParams(-1)


@pytest.mark.parametrize("n, value", [(0, Fraction(1771561, 625)), (5, 55), (3, Fraction(1331, 5))])
def test_threshold_values(n, value):
    assert phi_threshold(P9, n) == value
    assert phi_threshold(P9, n) == P9.alpha ** -n * P9.beta


@pytest.mark.parametrize("k", range(25))
def test_recurrence_equality_only_at_last_step(k):
    rows = recurrence_table(WeakParams(k))
    assert all(r["holds"] for r in rows)
    assert [r["n"] for r in rows if r["equality"]] == [WeakParams(k).L + 1]


def test_thresholds_are_floors():
    assert P9.thresholds(6) == (2834, 1288, 585, 266, 121, 55, 25)


def test_chain_weakness():
    G = chain_graph(3000)
    assert is_weak(G, range(5), P9)
    assert not is_weak(G, {4}, P9)
    assert is_weak(G, set(), P9)
    assert maximal_weak_subgraph(G, P9) == frozenset(range(5))
    assert strong_vertices(G, P9) == frozenset({5})


def test_small_weak_subgraphs():
    assert maximal_weak_subgraph(edge_graph(1, 9), P1) == frozenset({0})
    assert maximal_weak_subgraph(LOOP9, P1) == frozenset()
    assert maximal_weak_subgraph(edge_graph(4, 6), P1) == frozenset()


def test_edge_bound_enforced():
    G = StableGraph((5, 5), (0, 0), [(0, 1), (0, 1)])
    with pytest.raises(EdgeBoundError):
        maximal_weak_subgraph(G, P1)
    with pytest.raises(EdgeBoundError):
        index_vector(G, P1)


def brute_union(G, p):
    weak = [set(S) for r in range(G.num_vertices + 1)
            for S in itertools.combinations(range(G.num_vertices), r) if is_weak(G, S, p)]
    return frozenset().union(*weak), weak


@settings(max_examples=300)
@given(st.integers(0, 12).flatmap(
    lambda k: st.tuples(st.just(k), graphs(max_vertices=k // 2 + 2, max_extra_edges=k // 2 + 1,
                                           max_weight=60, max_edges=k // 2 + 1))))
def test_maximal_weak_matches_oracle(case):
    k, G = case
    p = WeakParams(k)
    union, weak = brute_union(G, p)
    W = maximal_weak_subgraph(G, p)
    assert W == union == brute_force_oracle(G, p)
    assert is_weak(G, W, p)
    assert all(S <= W for S in weak)


def test_phi_map_examples():
    p2 = WeakParams(2)
    G = StableGraph((0, 62), (0, 0), [(0, 0), (0, 1)])
    assert maximal_weak_subgraph(G, p2) == frozenset({0})
    H = phi_map(G, p2)
    assert canonical_form(H) == canonical_form(edge_graph(1, 62))
    assert phi_map(edge_graph(1, 9), P1) == edge_graph(1, 9)
    assert is_phi_fixed(SMOOTH10, P1)


def test_star_and_degenerations():
    p = WeakParams(STAR_K)
    S = star_graph(STAR_LEAVES)
    assert genus(S) == 3000
    assert maximal_weak_subgraph(S, p) == brute_force_oracle(S, p) == frozenset({0})
    assert is_phi_fixed(S, p)
    for D in star_degenerations(STAR_LEAVES):
        assert maximal_weak_subgraph(D, p) == frozenset({0, 1})
        assert not is_phi_fixed(D, p)
        assert canonical_form(phi_map(D, p)) == canonical_form(S)


def test_star_bound_from_small_leaves_fails():
    # leaves just above the naive bound of ~113.4 end up weak
    leaves = (114, 115, 116, 2655)
    S = star_graph(leaves)
    assert len(maximal_weak_subgraph(S, WeakParams(STAR_K))) > 1


@pytest.mark.parametrize("G, expected", [
    (SMOOTH10, "[10,10 | 0]"),
    (LOOP9, "[9,10 | 2]"),
    (edge_graph(4, 6), "[6,4 | 2]"),
])
def test_index_vector_examples(G, expected):
    assert str(index_vector(G, P1)) == expected


def test_index_counts_legs_at_strong_vertices():
    G = edge_graph(1, 9, legs=(2, 3))
    assert index_vector(G, P1).half_edges == 4


def test_index_vectors_compare_within_context():
    assert index_vector(SMOOTH10, P1) > index_vector(LOOP9, P1)
    with pytest.raises(ContextMismatchError):
        index_vector(SMOOTH10, P1) < index_vector(StableGraph.smooth(11), P1)
    with pytest.raises(ContextMismatchError):
        index_vector(SMOOTH10, P1) < index_vector(SMOOTH10, WeakParams(2))


def test_part_order_examples():
    assert part_order_geq(SMOOTH10, LOOP9, P1)
    assert part_order_geq(LOOP9, LOOP9, P1)
    assert not part_order_geq(edge_graph(5, 5), edge_graph(4, 6), P1)
    with pytest.raises(ContextMismatchError):
        part_order_geq(SMOOTH10, StableGraph.smooth(11), P1)
    with pytest.raises(NotFixedPointError):
        part_order_geq(SMOOTH10, StableGraph((0, 9), (0, 0), [(0, 0), (0, 1)]), WeakParams(2))


def test_codimension():
    assert codimension(SMOOTH10) == 0
    assert codimension(StableGraph((1, 10 ** 6 - 11), (0, 3), [(0, 1)] * 11)) == 11


def test_stabilize_examples():
    assert stabilize(SMOOTH10, P1) == StableGraph.smooth(12)
    G = stabilize(edge_graph(1, 9), P1)
    assert G == edge_graph(1, 11)
    assert maximal_weak_subgraph(G, P1) == frozenset({0})
    assert stabilize(edge_graph(1, 9), P1, x=0) == edge_graph(1, 9)
    assert genus(stabilize(edge_graph(1, 9), P1, x=3)) == 10 + 3 * math.factorial(2)
    with pytest.raises(NotFixedPointError):
        stabilize(StableGraph((0, 10), (0, 0), [(0, 0), (0, 1)]), WeakParams(2))


@pytest.mark.parametrize("l, n, lhs, rhs", [(1, 0, 25, 3), (5, 5, 78, 25)])
def test_inclusion_inequality_examples(l, n, lhs, rhs):
    assert inclusion_inequality(l, n) == (lhs, rhs, True)


def test_inclusion_record():
    rec = include_into_larger_k(edge_graph(1, 9), 1)
    assert rec.k_to == 2 and rec.contained
    assert rec.weak_from == frozenset({0})


@settings(max_examples=200)
@given(st.integers(0, 8).flatmap(
    lambda k: st.tuples(st.just(k), graphs(max_vertices=k // 2 + 2, max_extra_edges=k // 2 + 1,
                                           max_weight=400, max_edges=k // 2 + 1))))
def test_weak_set_is_automorphism_invariant(case):
    k, G = case
    p = WeakParams(k)
    W = maximal_weak_subgraph(G, p)
    for sigma in automorphisms(G):
        assert {sigma[v] for v in W} == W


@settings(max_examples=200)
@given(st.integers(0, 8).flatmap(
    lambda k: st.tuples(st.just(k), graphs(max_vertices=k // 2 + 2, max_extra_edges=k // 2 + 1,
                                           max_weight=400, max_edges=k // 2 + 1))))
def test_phi_map_idempotent_and_genus_preserving(case):
    k, G = case
    p = WeakParams(k)
    H = phi_map(G, p)
    assert genus(H) == genus(G) and H.num_legs == G.num_legs
    assert is_phi_fixed(H, p)
    assert phi_map(H, p) == H
    for e in range(G.num_edges):
        assert genus(contract_edge(G, e)) == genus(G)
