import itertools
import json

import pytest

from conftest import brute_canonical_key
from stablegraph.enumeration import (
    BudgetExceededError,
    GraphFamily,
    UnstableParametersError,
    WeightStrategy,
    composition_count,
    enumerate_family,
    enumerate_shapes,
    family_stats,
    phi_fibers,
)
from stablegraph.constructions import STAR_K, star_degenerations, star_graph
from stablegraph.graph import StableGraph, canonical_form, genus
from stablegraph.weak import WeakParams


def _connected(nv, edges):
    seen, todo = {0}, [0]
    while todo:
        v = todo.pop()
        for i, j in edges:
            for a, b in ((i, j), (j, i)):
                if a == v and b not in seen:
                    seen.add(b)
                    todo.append(b)
    return len(seen) == nv


def _splits(total, parts):
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cut + (total + parts - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(parts))


def labeled_shapes(L, n):
    """Every labeled connected multigraph with at most L edges, with legs attached."""
    for nv in range(1, L + 2):
        pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
        for ne in range(0, L + 1):
            for edges in itertools.combinations_with_replacement(pairs, ne):
                if _connected(nv, edges):
                    for legs in _splits(n, nv):
                        yield nv, edges, legs


def brute_shape_keys(L, n):
    return {brute_canonical_key(StableGraph((0,) * nv, legs, edges))
            for nv, edges, legs in labeled_shapes(L, n)}


def brute_family_keys(k, g, n):
    L = WeakParams(k).L
    keys = set()
    for nv, edges, legs in labeled_shapes(L, n):
        b1 = len(edges) - nv + 1
        if g - b1 < 0:
            continue
        for weights in _splits(g - b1, nv):
            G = StableGraph(weights, legs, edges)
            if all(2 * G.weights[v] - 2 + G.valence(v) > 0 for v in range(nv)):
                keys.add(brute_canonical_key(G))
    return keys


@pytest.mark.parametrize("k, n, count", [
    (1, 0, 3), (1, 1, 3), (0, 0, 3), (0, 5, 5), (1, 2, 4), (0, 3, 4),
])
def test_shape_counts(k, n, count):
    shapes = enumerate_shapes(WeakParams(k), n)
    assert len(shapes) == count
    assert len(shapes) == len(brute_shape_keys(WeakParams(k).L, n))


@pytest.mark.parametrize("k, n", [(2, 0), (2, 1), (3, 2), (4, 0), (4, 1)])
def test_shape_sets_match_brute_force(k, n):
    L = WeakParams(k).L
    ours = {brute_canonical_key(s.graph(0)) for s in enumerate_shapes(WeakParams(k), n)}
    assert ours == brute_shape_keys(L, n)
    assert all(s.connected and s.first_betti >= 0 for s in enumerate_shapes(WeakParams(k), n))


def test_single_edge_with_one_leg_has_one_orbit():
    # the two ends of a bridge between weight-0 vertices are swapped by an automorphism
    shapes = enumerate_shapes(WeakParams(1), 1)
    two_vertex = [s for s in shapes if s.n_vertices == 2]
    assert len(two_vertex) == 1


def test_family_size_golden():
    family = enumerate_family(WeakParams(1), 10, 0)
    assert len(family) == 7


@pytest.mark.parametrize("k, g, n", [
    (1, 10, 0), (1, 10, 1), (1, 10, 2), (1, 11, 0), (1, 11, 2), (1, 12, 1),
    (2, 5, 0), (2, 4, 1), (3, 3, 2), (0, 4, 3), (2, 63, 0), (3, 63, 0),
])
def test_exhaustive_family_matches_brute_force(k, g, n):
    family = enumerate_family(WeakParams(k), g, n)
    assert {brute_canonical_key(G) for G in family} == brute_family_keys(k, g, n)
    assert all(genus(G) == g and G.num_legs == n for G in family)


def test_unstable_parameters():
    for g, n in [(0, 0), (0, 1), (0, 2), (1, 0)]:
        with pytest.raises(UnstableParametersError):
            enumerate_family(WeakParams(1), g, n)


def test_budget_is_enforced(monkeypatch):
    p = WeakParams(2)
    needed = sum(composition_count(s, 63) for s in enumerate_shapes(p, 0))
    with pytest.raises(BudgetExceededError):
        enumerate_family(p, 63, 0, budget=needed - 1)
    monkeypatch.setenv("STABLEGRAPH_BUDGET", "10")
    with pytest.raises(BudgetExceededError):
        enumerate_family(p, 63, 0)


def test_strategy_parsing():
    assert WeightStrategy.parse("exhaustive").kind == "exhaustive"
    s = WeightStrategy.parse("sample:5", seed=3)
    assert (s.kind, s.count, s.seed, s.describe()) == ("sampled", 5, 3, "sample:5")
    assert WeightStrategy.parse("boundary:7,9").probes == (7, 9)
    for bad in ("sample", "exhaustive:3", "random:2"):
        with pytest.raises(ValueError):
            WeightStrategy.parse(bad)


def test_sampled_family_is_reproducible():
    p = WeakParams(9)
    a = enumerate_family(p, 3000, 0, WeightStrategy.parse("sample:2", seed=11))
    b = enumerate_family(p, 3000, 0, WeightStrategy.parse("sample:2", seed=11))
    c = enumerate_family(p, 3000, 0, WeightStrategy.parse("sample:2", seed=12))
    assert list(a.members) == list(b.members)
    assert set(a.members) != set(c.members)


def test_sampled_family_contains_extremal_assignments():
    p = WeakParams(4)
    family = enumerate_family(p, 500, 0, WeightStrategy.parse("sample:1", seed=0))
    keys = set(family.members)
    chain = StableGraph((0, 0, 500), (0, 0, 0), [(0, 1), (1, 2), (0, 0)])
    for G in (StableGraph.smooth(500), StableGraph((6, 494), (0, 0), [(0, 1)]),
              StableGraph((7, 493), (0, 0), [(0, 1)]), chain):
        if all(2 * w - 2 + G.valence(v) > 0 for v, w in enumerate(G.weights)):
            assert canonical_form(G) in keys
    exhaustive_like = enumerate_family(p, 500, 0, WeightStrategy.parse("boundary:"))
    assert set(exhaustive_like.members) <= keys


def test_family_save_load_round_trip(tmp_path):
    family = enumerate_family(WeakParams(1), 10, 1)
    out = family.save(tmp_path / "fam")
    files = sorted(p.name for p in out.iterdir())
    assert len(files) == len(family) + 1 and "family.json" in files
    manifest = json.loads((out / "family.json").read_text())
    assert manifest["count"] == len(family)
    again = GraphFamily.load(out)
    assert list(again.members) == list(family.members)
    assert (again.k, again.g, again.n) == (1, 10, 1)


def test_identical_runs_write_identical_trees(tmp_path):
    for name in ("a", "b"):
        enumerate_family(WeakParams(2), 12, 1).save(tmp_path / name)
    a = {p.name: p.read_bytes() for p in (tmp_path / "a").iterdir()}
    b = {p.name: p.read_bytes() for p in (tmp_path / "b").iterdir()}
    assert a == b


def test_star_fiber_has_four_members():
    graphs = [star_graph()] + star_degenerations()
    family = GraphFamily.from_graphs(STAR_K, graphs)
    fibers = phi_fibers(family, WeakParams(STAR_K))
    assert [len(v) for v in fibers.values()] == [4]
    assert list(fibers) == [canonical_form(star_graph())]


def test_fibers_partition_the_family():
    p = WeakParams(2)
    family = enumerate_family(p, 63, 0)
    fibers = phi_fibers(family, p)
    members = [m for ms in fibers.values() for m in ms]
    assert sorted(members) == sorted(family.members)
    for image in fibers:
        assert image in family.members


def test_stats_shape():
    family = enumerate_family(WeakParams(1), 10, 0)
    stats = family_stats(family, WeakParams(1))
    assert stats["count"] == 7
    assert stats["codimension_counts"] == {"0": 1, "1": 6}
    assert stats["fixed_points"] == 7
