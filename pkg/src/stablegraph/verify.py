"""Property suites over graph families, with counterexample reports.

Each suite is a universally quantified assertion over the members of a
family (and, where it applies, their edges, vertex subsets or
automorphisms).  A pass over an exhaustive family is a finite proof for
those parameters.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import kernels, stg
from .constructions import (
    CHAIN_K,
    STAR_K,
    STAR_LEAVES,
    chain_graph,
    codim1_graph,
    codim11_graph,
    star_degenerations,
    star_graph,
)
from .enumeration import GraphFamily, phi_fibers
from .graph import (
    StableGraph,
    automorphisms,
    canonical_form,
    contraction_map,
    full_subgraph,
    genus,
    validate,
)
from .weak import (
    WeakParams,
    inclusion_inequality,
    index_vector,
    is_phi_fixed,
    is_weak,
    maximal_weak_subgraph,
    phi_map,
    recurrence_table,
    stabilize,
)

DEFAULT_CAP = 10
ORACLE_MAX_VERTICES = 20


class GenusBelowBetaError(ValueError):
    """Theory suites were requested for a genus at or below beta."""


class OracleWitnessError(AssertionError):
    """The union of all weak subsets is not itself weak."""


def brute_force_weak_union(G: StableGraph, p: WeakParams) -> Tuple[FrozenSet[int], bool, int]:
    """Union of every weak vertex subset, found by trying all of them.

    Returns ``(union, union_is_weak, equality_count)``; the last counts the
    subsets whose genus sits exactly on the bound.  Uses exact fractions and
    :func:`full_subgraph` only, independent of the kernels.
    """
    nv = G.num_vertices
    if nv > ORACLE_MAX_VERTICES:
        raise ValueError(f"{nv} vertices exceeds the oracle bound {ORACLE_MAX_VERTICES}")
    union = set()
    ties = 0
    for size in range(nv + 1):
        bound = p.phi(nv - size)
        for members in itertools.combinations(range(nv), size):
            g = full_subgraph(G, members).genus
            if g <= bound:
                union.update(members)
                ties += g == bound
    union = frozenset(union)
    return union, is_weak(G, union, p), ties


def brute_force_oracle(G: StableGraph, p: WeakParams) -> FrozenSet[int]:
    union, ok, _ = brute_force_weak_union(G, p)
    if not ok:
        raise OracleWitnessError(f"union {sorted(union)} of weak subsets is not weak")
    return union


def _fmt(vs: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(vs))) + "}"


def _mask(m: int) -> str:
    return _fmt(v for v in range(m.bit_length()) if (m >> v) & 1)


class _Analysis:
    """Per-graph data shared by the suites."""

    def __init__(self, G: StableGraph, p: WeakParams):
        self.G = G
        self.p = p
        self.W = maximal_weak_subgraph(G, p)
        self._contractions: Dict[int, tuple] = {}
        self._genera = None
        self._index = None
        self.oracle = None

    @property
    def genera(self):
        if self._genera is None:
            G = self.G
            self._genera = kernels.subset_genera(
                G.num_vertices, list(G.weights), [i for i, _ in G.edges], [j for _, j in G.edges])
        return self._genera

    @property
    def index(self):
        if self._index is None:
            self._index = index_vector(self.G, self.p)
        return self._index

    def edge_kind(self, e: int) -> str:
        i, j = self.G.edges[e]
        inside = (i in self.W) + (j in self.W)
        return ("strong", "mixed", "weak")[inside]

    def contraction(self, e: int):
        """(G/e, vertex map, maximal weak subgraph of G/e, image of W)."""
        if e not in self._contractions:
            H, vmap = contraction_map(self.G, [e])
            WH = maximal_weak_subgraph(H, self.p)
            self._contractions[e] = (H, vmap, WH, frozenset(vmap[v] for v in self.W))
        return self._contractions[e]


# per-graph checks: (analysis) -> (violations, edge cases examined)

def _check_oracle(a: _Analysis):
    union, ok, ties = brute_force_weak_union(a.G, a.p)
    a.oracle = (union, ok, ties)
    out = []
    if union != a.W:
        out.append(f"optimized {_fmt(a.W)} != brute force {_fmt(union)}")
    if not ok:
        out.append(f"union {_fmt(union)} of weak subsets is not weak")
    return out, 2 ** a.G.num_vertices


def _check_union_closure(a: _Analysis):
    nv = a.G.num_vertices
    hit = kernels.union_closure_violation(nv, a.genera, list(a.p.thresholds(nv)))
    if hit is None:
        return [], 4 ** nv
    x, y = hit
    u = x | y
    m = nv - bin(u).count("1")
    return [f"weak {_mask(x)} and weak {_mask(y)} but union {_mask(u)} has genus "
            f"{a.genera[u]} > phi({m}) = {a.p.phi(m)}"], 4 ** nv


def _check_genus_union_bound(a: _Analysis):
    nv = a.G.num_vertices
    hit = kernels.genus_union_bound_violation(nv, a.genera, a.p.L)
    if hit is None:
        return [], 4 ** nv
    x, y = hit
    return [f"genus({_mask(x | y)}) = {a.genera[x | y]} > {a.genera[x]} + {a.genera[y]} + {a.p.L}"], 4 ** nv


def _check_proper_invariant(a: _Analysis):
    out = []
    if len(a.W) == a.G.num_vertices:
        out.append("maximal weak subgraph is the whole graph")
    auts = automorphisms(a.G)
    for sigma in auts:
        image = frozenset(sigma[v] for v in a.W)
        if image != a.W:
            out.append(f"automorphism {sigma} maps {_fmt(a.W)} to {_fmt(image)}")
            break
    return out, len(auts)


def _check_contraction_weak_edge(a: _Analysis):
    out, n = [], 0
    for e in range(a.G.num_edges):
        if a.edge_kind(e) != "weak":
            continue
        n += 1
        _, _, WH, image = a.contraction(e)
        if image != WH:
            out.append(f"edge {e}: image {_fmt(image)} != weak subgraph {_fmt(WH)} of the contraction")
    return out, n


def _check_contraction_subset(a: _Analysis):
    out, n = [], 0
    for e in range(a.G.num_edges):
        if a.edge_kind(e) == "mixed":
            continue
        n += 1
        _, _, WH, image = a.contraction(e)
        if not image <= WH:
            out.append(f"edge {e}: image {_fmt(image)} not inside {_fmt(WH)}")
    return out, n


def _check_edge_membership(a: _Analysis):
    out = []
    for e in range(a.G.num_edges):
        _, vmap, WH, _ = a.contraction(e)
        merged = vmap[a.G.edges[e][0]]
        if (a.edge_kind(e) == "weak") != (merged in WH):
            out.append(f"edge {e} ({a.edge_kind(e)}): merged vertex {merged} "
                       f"{'in' if merged in WH else 'not in'} {_fmt(WH)}")
    return out, a.G.num_edges


def _check_absorption(a: _Analysis):
    if not a.W:
        return [], 0
    top = max(a.G.weights[v] for v in a.W)
    out = [f"vertex {v} of weight {w} <= {top} lies outside {_fmt(a.W)}"
           for v, w in enumerate(a.G.weights) if w <= top and v not in a.W]
    return out, a.G.num_vertices


def _check_joins(a: _Analysis):
    out, n = [], 0
    for e in range(a.G.num_edges):
        if a.edge_kind(e) != "mixed":
            continue
        n += 1
        H, vmap, _, image = a.contraction(e)
        lam = image - {vmap[a.G.edges[e][0]]}
        if not is_weak(H, lam, a.p):
            out.append(f"edge {e}: {_fmt(lam)} is not weak in the contraction")
    return out, n


def _check_index_monotonicity(a: _Analysis):
    out = []
    for e in range(a.G.num_edges):
        H, _, _, _ = a.contraction(e)
        after = index_vector(H, a.p)
        if a.edge_kind(e) == "weak":
            if after != a.index:
                out.append(f"internal edge {e}: index {after} != {a.index}")
        elif not after > a.index:
            out.append(f"edge {e} ({a.edge_kind(e)}): index {after} not > {a.index}")
    return out, a.G.num_edges


def _check_low_genus(a: _Analysis):
    k = a.p.k
    if k == 0:
        return [], 0
    limit = 0 if k == 1 else k + 2
    out = [f"vertex {v} of weight {w} <= {limit} is strong"
           for v, w in enumerate(a.G.weights) if w <= limit and v not in a.W]
    return out, a.G.num_vertices


def _check_image_properties(a: _Analysis):
    G, p = a.G, a.p
    out, n = [], 1
    image = phi_map(G, p)
    if genus(image) != genus(G):
        out.append("contraction map changed the genus")
    if not is_phi_fixed(image, p):
        out.append("image is not a fixed point")
    elif phi_map(image, p) != image:
        out.append("contraction map is not idempotent")
    if is_phi_fixed(G, p):
        strong_min = 0 if p.k == 0 else 1 if p.k == 1 else p.k + 3
        for e, (i, j) in enumerate(G.edges):
            n += 1
            if i in a.W and j in a.W:
                out.append(f"edge {e} has no strong endpoint")
        for v, w in enumerate(G.weights):
            if v not in a.W and w < strong_min:
                out.append(f"strong vertex {v} has weight {w} < {strong_min}")
        if G.num_edges:
            top = index_vector(StableGraph.smooth(genus(G), G.num_legs), p)
            if not top > a.index:
                out.append(f"smooth graph index {top} not above {a.index}")
    return out, n


def _check_inclusion(a: _Analysis):
    p_to = WeakParams(a.p.k + 1)
    W_to = maximal_weak_subgraph(a.G, p_to)
    if not a.W <= W_to:
        return [f"{_fmt(a.W)} at k={a.p.k} not inside {_fmt(W_to)} at k={p_to.k}"], 1
    return [], 1


def _check_stabilization(a: _Analysis):
    if not is_phi_fixed(a.G, a.p) or len(a.W) == a.G.num_vertices:
        return [], 0
    H = stabilize(a.G, a.p, 1)
    out = []
    WH = maximal_weak_subgraph(H, a.p)
    if WH != a.W:
        out.append(f"weak subgraph moved from {_fmt(a.W)} to {_fmt(WH)}")
    if not is_phi_fixed(H, a.p):
        out.append("stabilized graph is not a fixed point")
    if index_vector(H, a.p).half_edges != a.index.half_edges:
        out.append("stabilization changed the half-edge count")
    return out, 1


def _observe_mixed_edges(a: _Analysis, tally: Dict[str, int]):
    for e in range(a.G.num_edges):
        if a.edge_kind(e) != "mixed":
            continue
        _, _, WH, image = a.contraction(e)
        key = "image_contained" if image <= WH else "image_not_contained"
        tally[key] = tally.get(key, 0) + 1
    return [], sum(1 for e in range(a.G.num_edges) if a.edge_kind(e) == "mixed")


GRAPH_CHECKS: Dict[str, Callable] = {
    "oracle-equivalence": _check_oracle,
    "union-closure": _check_union_closure,
    "genus-union-bound": _check_genus_union_bound,
    "proper-invariant": _check_proper_invariant,
    "contraction-weak-edge": _check_contraction_weak_edge,
    "contraction-subset": _check_contraction_subset,
    "edge-membership": _check_edge_membership,
    "absorption": _check_absorption,
    "joins": _check_joins,
    "index-monotonicity": _check_index_monotonicity,
    "low-genus": _check_low_genus,
    "image-properties": _check_image_properties,
    "k-inclusion": _check_inclusion,
    "stabilization": _check_stabilization,
}

FAMILY_SUITES = ("family-integrity", "strong-weak-observation", "partial-order",
                 "phi-recurrence", "boundary-equality")

SUITES = ("family-integrity", "oracle-equivalence", "union-closure", "genus-union-bound",
          "proper-invariant", "contraction-weak-edge", "contraction-subset",
          "strong-weak-observation", "edge-membership", "absorption", "joins",
          "index-monotonicity", "low-genus", "image-properties", "partial-order",
          "phi-recurrence", "k-inclusion", "stabilization", "boundary-equality")

# suites whose statements assume g > beta
THEORY_SUITES = frozenset({
    "proper-invariant", "contraction-weak-edge", "contraction-subset",
    "strong-weak-observation", "edge-membership", "absorption", "joins",
    "index-monotonicity", "low-genus", "image-properties", "partial-order",
    "stabilization",
})


@dataclass
class CheckResult:
    suite: str
    graphs_checked: int = 0
    edge_cases_checked: int = 0
    status: str = "pass"  # pass | fail | skipped
    reason: str = ""
    counterexamples: List[dict] = field(default_factory=list)
    violations: int = 0
    observations: Dict[str, int] = field(default_factory=dict)

    def record(self, G: Optional[StableGraph], witness: str, cap: Optional[int]):
        self.violations += 1
        self.status = "fail"
        if cap is None or len(self.counterexamples) < cap:
            self.counterexamples.append(
                {"stg": stg.dumps(G) if G is not None else None, "witness": witness})

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "status": self.status,
            "graphs_checked": self.graphs_checked,
            "edge_cases_checked": self.edge_cases_checked,
            "violations": self.violations,
            "counterexamples": self.counterexamples,
        }
        if self.reason:
            d["reason"] = self.reason
        if self.observations:
            d["observations"] = dict(sorted(self.observations.items()))
        return d


@dataclass
class VerificationReport:
    parameters: dict
    results: List[CheckResult]
    normative: bool = True
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def overall(self) -> str:
        return "fail" if any(r.status == "fail" for r in self.results) else "pass"

    @property
    def passed(self) -> bool:
        return self.overall == "pass"

    def result(self, suite: str) -> CheckResult:
        for r in self.results:
            if r.suite == suite:
                return r
        raise KeyError(suite)

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "parameters": self.parameters,
            "normative": self.normative,
            "overall": self.overall,
            "results": [r.to_dict() for r in self.results],
        }
        if timing:
            d["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=False) + "\n"


def _family_integrity(family: GraphFamily, p: WeakParams, res: CheckResult, cap):
    keys = set(family.members)
    for key, G in family.members.items():
        res.graphs_checked += 1
        problems = list(validate(G, family.g).problems)
        if G.num_legs != family.n:
            problems.append(f"{G.num_legs} legs, expected {family.n}")
        if G.num_edges > p.max_edges:
            problems.append(f"{G.num_edges} edges exceeds {p.max_edges}")
        if canonical_form(G) != key:
            problems.append("stored graph does not match its canonical key")
        if family.strategy.kind == "exhaustive":
            for e in range(G.num_edges):
                res.edge_cases_checked += 1
                H = contraction_map(G, [e])[0]
                if canonical_form(H) not in keys:
                    problems.append(f"contracting edge {e} leaves the family")
        for msg in problems:
            res.record(G, msg, cap)


def _partial_order(fixed: List[Tuple[bytes, StableGraph, object]], res: CheckResult, cap,
                   max_pairs: int = 20000):
    """Antisymmetry and transitivity of the order on fixed points (sampled)."""
    res.graphs_checked = len(fixed)
    if not fixed:
        return

    def geq(x, y):
        return x[2] > y[2] or x[0] == y[0]

    rng = random.Random(0)
    m = len(fixed)
    if m * m <= max_pairs:
        pairs = [(x, y) for x in fixed for y in fixed]
    else:
        pairs = [(rng.choice(fixed), rng.choice(fixed)) for _ in range(max_pairs)]
    for x, y in pairs:
        res.edge_cases_checked += 1
        if not geq(x, x):
            res.record(x[1], "not reflexive", cap)
        if geq(x, y) and geq(y, x) and x[0] != y[0]:
            res.record(x[1], f"antisymmetry fails against {stg.dumps(y[1])!r}", cap)
    by_index = sorted(fixed, key=lambda t: (t[2].weights, t[2].half_edges))
    for _ in range(min(max_pairs, m ** 3)):
        x, y, z = (rng.choice(by_index) for _ in range(3))
        res.edge_cases_checked += 1
        if geq(x, y) and geq(y, z) and not geq(x, z):
            res.record(x[1], "transitivity fails", cap)


def _phi_recurrence(p: WeakParams, res: CheckResult, cap):
    for row in recurrence_table(p):
        res.edge_cases_checked += 1
        if not row["holds"]:
            res.record(None, f"2*phi({row['n']}) + L = {row['lhs']} > phi({row['n'] - 1}) = {row['rhs']}", cap)
        if row["equality"] != (row["n"] == p.L + 1):
            res.record(None, f"equality at n={row['n']} is {row['equality']}", cap)


def _inclusion_tables(p: WeakParams, res: CheckResult, cap):
    q = WeakParams(p.k + 1)
    for m in range(p.max_vertices + 1):
        res.edge_cases_checked += 1
        if q.phi(m) < p.phi(m):
            res.record(None, f"phi_{q.k}({m}) = {q.phi(m)} < phi_{p.k}({m}) = {p.phi(m)}", cap)
    if p.k % 2 == 1:
        l = p.L
        for n in range(l + 1):
            res.edge_cases_checked += 1
            lhs, rhs, ok = inclusion_inequality(l, n)
            if not ok:
                res.record(None, f"l={l}, n={n}: {lhs} < {rhs}", cap)


def check_graph(suite: str, G: StableGraph, p: WeakParams) -> List[str]:
    """Run one per-graph suite on one graph; used to replay counterexamples."""
    return GRAPH_CHECKS[suite](_Analysis(G, p))[0]


def run_suite(family: GraphFamily, p: Optional[WeakParams] = None,
              suites: Optional[Sequence[str]] = None, force: bool = False,
              cap: Optional[int] = DEFAULT_CAP) -> VerificationReport:
    p = p if p is not None else family.params
    if p.k != family.k:
        raise ValueError(f"family was built for k={family.k}, params have k={p.k}")
    selected = list(SUITES) if suites is None else list(suites)
    unknown = [s for s in selected if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    below = family.g <= p.beta
    if below and not force and any(s in THEORY_SUITES for s in selected):
        raise GenusBelowBetaError(
            f"genus {family.g} <= beta = {p.beta} (~{float(p.beta):.1f}); theory suites need "
            f"g > beta (use force to explore anyway)")
    selected = [s for s in SUITES if s in selected]
    results = {s: CheckResult(s) for s in selected}
    timing = {s: 0.0 for s in selected}
    per_graph = [s for s in selected if s in GRAPH_CHECKS]
    need_oracle = "boundary-equality" in selected and "oracle-equivalence" not in per_graph
    ties = 0
    fixed = []
    tally: Dict[str, int] = {}

    for key, G in family.members.items():
        a = _Analysis(G, p)
        for s in per_graph:
            t0 = time.perf_counter()
            bad, cases = GRAPH_CHECKS[s](a)
            timing[s] += time.perf_counter() - t0
            r = results[s]
            r.graphs_checked += 1
            r.edge_cases_checked += cases
            for msg in bad:
                r.record(G, msg, cap)
        if need_oracle:
            t0 = time.perf_counter()
            a.oracle = brute_force_weak_union(G, p)
            timing["boundary-equality"] += time.perf_counter() - t0
        if a.oracle is not None:
            ties += a.oracle[2]
        if "strong-weak-observation" in selected:
            t0 = time.perf_counter()
            _, cases = _observe_mixed_edges(a, tally)
            r = results["strong-weak-observation"]
            r.graphs_checked += 1
            r.edge_cases_checked += cases
            timing["strong-weak-observation"] += time.perf_counter() - t0
        if "partial-order" in selected and is_phi_fixed(G, p):
            fixed.append((key, G, a.index))

    if "strong-weak-observation" in selected:
        results["strong-weak-observation"].observations = tally
    for s, fn in (("family-integrity", lambda r: _family_integrity(family, p, r, cap)),
                  ("partial-order", lambda r: _partial_order(fixed, r, cap)),
                  ("phi-recurrence", lambda r: _phi_recurrence(p, r, cap))):
        if s in selected:
            t0 = time.perf_counter()
            fn(results[s])
            timing[s] += time.perf_counter() - t0
    if "k-inclusion" in selected:
        _inclusion_tables(p, results["k-inclusion"], cap)
    if "boundary-equality" in selected:
        r = results["boundary-equality"]
        r.graphs_checked = len(family)
        r.edge_cases_checked = ties
        r.observations = {"equality_cases": ties}
        if ties == 0:
            r.record(None, "no weakness comparison was exercised with equality", cap)

    params = {"k": family.k, "g": family.g, "n": family.n,
              "strategy": family.strategy.describe(), "seed": family.strategy.seed,
              "family_size": len(family)}
    return VerificationReport(params, [results[s] for s in selected],
                              normative=not below, timing=timing)


def _expect(res: CheckResult, cond: bool, G: Optional[StableGraph], witness: str):
    res.edge_cases_checked += 1
    if not cond:
        res.record(G, witness, None)


def run_paper_examples() -> VerificationReport:
    """Reproduce the worked examples with exact arithmetic."""
    results = []
    timing = {}

    t0 = time.perf_counter()
    r = CheckResult("constants-k9")
    p9 = WeakParams(9)
    _expect(r, p9.L == 5, None, f"L = {p9.L}")
    _expect(r, p9.alpha == Fraction(11, 5), None, f"alpha = {p9.alpha}")
    _expect(r, p9.beta == Fraction(11 ** 6, 5 ** 4), None, f"beta = {p9.beta}")
    results.append(r)
    timing[r.suite] = time.perf_counter() - t0

    t0 = time.perf_counter()
    r = CheckResult("chain-example", graphs_checked=1)
    p = WeakParams(CHAIN_K)
    G = chain_graph(3000)
    _expect(r, genus(G) == 3000, G, f"genus {genus(G)}")
    _expect(r, maximal_weak_subgraph(G, p) == frozenset(range(5)), G,
            f"weak subgraph {_fmt(maximal_weak_subgraph(G, p))}")
    _expect(r, brute_force_oracle(G, p) == frozenset(range(5)), G, "oracle disagrees")
    _expect(r, not is_weak(G, {4}, p), G, "{p5} is weak")
    for j in range(1, 6):
        _expect(r, is_weak(G, range(j), p), G, f"prefix of length {j} is not weak")
    results.append(r)
    timing[r.suite] = time.perf_counter() - t0

    t0 = time.perf_counter()
    r = CheckResult("star-remark")
    p = WeakParams(STAR_K)
    S = star_graph(STAR_LEAVES)
    degens = star_degenerations(STAR_LEAVES)
    r.graphs_checked = 1 + len(degens)
    _expect(r, genus(S) == 3000 and 3000 > p.beta, S, "star genus must be 3000 > beta")
    _expect(r, maximal_weak_subgraph(S, p) == frozenset({0}), S,
            f"weak subgraph {_fmt(maximal_weak_subgraph(S, p))}")
    _expect(r, len(automorphisms(S)) == 1, S, "automorphism group is not trivial")
    _expect(r, is_phi_fixed(S, p), S, "star is not a fixed point")
    for D in degens:
        _expect(r, maximal_weak_subgraph(D, p) == frozenset({0, 1}), D,
                f"weak subgraph {_fmt(maximal_weak_subgraph(D, p))}")
        _expect(r, canonical_form(phi_map(D, p)) == canonical_form(S), D, "does not contract to the star")
    fam = GraphFamily.from_graphs(STAR_K, [S] + degens)
    fibers = phi_fibers(fam, p)
    sizes = sorted(len(v) for v in fibers.values())
    _expect(r, len(fam) == 4 and sizes == [4], S, f"fiber sizes {sizes}")
    results.append(r)
    timing[r.suite] = time.perf_counter() - t0

    t0 = time.perf_counter()
    r = CheckResult("boundary-graph-codim11", graphs_checked=1)
    p = WeakParams(20)
    G = codim11_graph(10 ** 6, 3)
    _expect(r, genus(G) == 10 ** 6 and 10 ** 6 > p.beta, G, "genus must be 10^6 > beta")
    _expect(r, maximal_weak_subgraph(G, p) == frozenset({0}), G,
            f"weak subgraph {_fmt(maximal_weak_subgraph(G, p))}")
    _expect(r, is_phi_fixed(G, p), G, "not a fixed point")
    _expect(r, G.num_edges == 11, G, f"codimension {G.num_edges}")
    results.append(r)
    timing[r.suite] = time.perf_counter() - t0

    t0 = time.perf_counter()
    r = CheckResult("boundary-graph-codim1", graphs_checked=1)
    G = codim1_graph(10 ** 6, 10)
    _expect(r, maximal_weak_subgraph(G, p) == frozenset({0}), G,
            f"weak subgraph {_fmt(maximal_weak_subgraph(G, p))}")
    _expect(r, is_phi_fixed(G, p), G, "not a fixed point")
    _expect(r, G.num_edges == 1, G, f"codimension {G.num_edges}")
    results.append(r)
    timing[r.suite] = time.perf_counter() - t0

    return VerificationReport({"examples": [x.suite for x in results]}, results, timing=timing)
