"""Enumeration of the families of stable graphs with a bounded edge count.

Graphs are built in two stages: connected multigraph shapes with leg
distributions (small, independent of the genus), then weight assignments
distributing ``g - b1`` over the vertices.  Weight assignments are either
exhaustive or a reproducible sample that always contains the assignments
sitting on the weakness thresholds.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from . import stg
from .graph import StableGraph, canonical_form, canonical_graph, genus, validate
from .weak import WeakParams, index_vector, is_phi_fixed, phi_map

DEFAULT_BUDGET = 10 ** 7
BUDGET_ENV = "STABLEGRAPH_BUDGET"
MANIFEST = "family.json"


class EnumerationError(ValueError):
    pass


class UnstableParametersError(EnumerationError):
    """``2g - 2 + n <= 0``: no stable graph exists."""


class BudgetExceededError(EnumerationError):
    pass


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


@dataclass(frozen=True)
class GraphShape:
    n_vertices: int
    edges: Tuple[Tuple[int, int], ...]
    legs: Tuple[int, ...]

    @property
    def connected(self) -> bool:
        return self.graph(0).is_connected()

    @property
    def first_betti(self) -> int:
        return len(self.edges) - self.n_vertices + 1

    def graph(self, weights) -> StableGraph:
        if isinstance(weights, int):
            weights = (weights,) * self.n_vertices
        return StableGraph(tuple(weights), self.legs, self.edges)

    def min_weights(self) -> Tuple[int, ...]:
        """Smallest weight making each vertex stable."""
        G = self.graph(0)
        return tuple(max(0, (2 - G.valence(v)) // 2 + 1) for v in range(self.n_vertices))


@lru_cache(maxsize=None)
def _unlegged_shapes(L: int) -> Tuple[StableGraph, ...]:
    found = {}
    for nv in range(1, L + 2):
        pairs = [(i, j) for i in range(nv) for j in range(i, nv)]
        for ne in range(nv - 1, L + 1):
            for edges in itertools.combinations_with_replacement(pairs, ne):
                G = StableGraph((0,) * nv, (0,) * nv, edges)
                if not G.is_connected():
                    continue
                H = canonical_graph(G)
                found.setdefault(canonical_form(H), H)
    return tuple(found[key] for key in sorted(found))


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _shapes(L: int, n: int) -> Tuple[GraphShape, ...]:
    found = {}
    for base in _unlegged_shapes(L):
        for legs in _compositions(n, base.num_vertices):
            H = canonical_graph(StableGraph(base.weights, legs, base.edges))
            found.setdefault(canonical_form(H), H)
    return tuple(GraphShape(H.num_vertices, H.edges, H.legs)
                 for H in (found[key] for key in sorted(found)))


def enumerate_shapes(p: WeakParams, n: int) -> List[GraphShape]:
    """Connected shapes with at most ``L`` edges and ``n`` legs, up to isomorphism."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_shapes(p.max_edges, n))


@dataclass(frozen=True)
class WeightStrategy:
    kind: str = "exhaustive"  # exhaustive | sampled | boundary
    count: int = 0
    seed: int = 0
    probes: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("exhaustive", "sampled", "boundary"):
            raise ValueError(f"unknown strategy {self.kind!r}")

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "WeightStrategy":
        """``exhaustive``, ``sample:COUNT`` or ``boundary:W1,W2,...``."""
        kind, _, arg = text.partition(":")
        if kind == "exhaustive" and not arg:
            return cls("exhaustive", seed=seed)
        if kind in ("sample", "sampled") and arg:
            return cls("sampled", count=int(arg), seed=seed)
        if kind == "boundary":
            probes = tuple(int(x) for x in arg.split(",") if x.strip())
            return cls("boundary", seed=seed, probes=probes)
        raise ValueError(f"bad strategy {text!r}; expected exhaustive, sample:COUNT or boundary:W,...")

    def describe(self) -> str:
        if self.kind == "sampled":
            return f"sample:{self.count}"
        if self.kind == "boundary":
            return "boundary:" + ",".join(map(str, self.probes))
        return "exhaustive"


def _digest(key: bytes) -> str:
    return hashlib.sha256(key).hexdigest()[:16]


@dataclass
class GraphFamily:
    k: int
    g: int
    n: int
    strategy: WeightStrategy = field(default_factory=WeightStrategy)
    members: Dict[bytes, StableGraph] = field(default_factory=dict)

    def __post_init__(self):
        self.members = {key: self.members[key] for key in sorted(self.members)}

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[StableGraph]:
        return iter(self.members.values())

    @property
    def params(self) -> WeakParams:
        return WeakParams(self.k)

    @classmethod
    def from_graphs(cls, k: int, graphs: Iterable[StableGraph],
                    strategy: Optional[WeightStrategy] = None) -> "GraphFamily":
        members = {}
        g = n = None
        for G in graphs:
            if g is None:
                g, n = genus(G), G.num_legs
            elif (genus(G), G.num_legs) != (g, n):
                raise EnumerationError("family members must share genus and leg count")
            H = canonical_graph(G)
            members.setdefault(canonical_form(H), H)
        if g is None:
            raise EnumerationError("cannot infer (g, n) of an empty family")
        return cls(k, g, n, strategy or WeightStrategy("boundary"), members)

    def manifest(self) -> dict:
        codim = Counter(G.num_edges for G in self)
        return {
            "format": "stablegraph-family v1",
            "k": self.k,
            "g": self.g,
            "n": self.n,
            "strategy": self.strategy.describe(),
            "seed": self.strategy.seed,
            "count": len(self),
            "codimension_counts": {str(c): codim[c] for c in sorted(codim)},
            "members": [_digest(key) + ".stg" for key in self.members],
        }

    def save(self, directory: Union[str, Path]) -> Path:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        for key, G in self.members.items():
            (directory / (_digest(key) + ".stg")).write_bytes(key)
        (directory / MANIFEST).write_text(json.dumps(self.manifest(), indent=2) + "\n",
                                          encoding="utf-8")
        return directory

    @classmethod
    def load(cls, directory: Union[str, Path]) -> "GraphFamily":
        directory = Path(directory)
        manifest = json.loads((directory / MANIFEST).read_text(encoding="utf-8"))
        strategy = WeightStrategy.parse(manifest["strategy"], seed=manifest.get("seed", 0))
        members = {}
        for name in manifest["members"]:
            G = canonical_graph(stg.load(directory / name))
            members[canonical_form(G)] = G
        return cls(manifest["k"], manifest["g"], manifest["n"], strategy, members)


def composition_count(shape: GraphShape, g: int) -> int:
    total = g - shape.first_betti - sum(shape.min_weights())
    if total < 0:
        return 0
    return math.comb(total + shape.n_vertices - 1, shape.n_vertices - 1)


def _near(p: WeakParams, m: int) -> List[int]:
    if m < 0:
        return []
    t = math.floor(p.phi(m))
    return [t - 1, t, t + 1]


def probe_weights(p: WeakParams, extra: Iterable[int] = ()) -> List[int]:
    """Weights at which weakness or absorption can switch, for any vertex count."""
    probes = {0, 1, 2, p.k + 2, p.k + 3}
    for m in range(p.max_vertices + 1):
        probes.update(_near(p, m))
    probes.update(extra)
    return sorted(x for x in probes if x >= 0)


def _shape_probes(p: WeakParams, nv: int, extra: Iterable[int]):
    """Probes for single vertices and for vertex pairs of an ``nv``-vertex graph.

    A set of ``s`` vertices is measured against the bound at ``nv - s``.
    """
    single = {0, 1, 2, p.k + 2, p.k + 3, *_near(p, nv - 1), *_near(p, nv - 2), *extra}
    pair = {*_near(p, nv - 2), *_near(p, nv - 3), *extra}
    return sorted(x for x in single if x >= 0), sorted(x for x in pair if x >= 0)


def _exhaustive_assignments(shape: GraphShape, g: int) -> Iterator[Tuple[int, ...]]:
    base = shape.min_weights()
    total = g - shape.first_betti - sum(base)
    if total < 0:
        return
    for comp in _compositions(total, shape.n_vertices):
        yield tuple(b + c for b, c in zip(base, comp))


def _probe_assignments(shape: GraphShape, g: int, p: WeakParams,
                       extra: Iterable[int] = ()) -> Iterator[Tuple[int, ...]]:
    base = shape.min_weights()
    nv = shape.n_vertices
    singles, pairs = _shape_probes(p, nv, extra)
    total = g - shape.first_betti - sum(base)
    if total < 0:
        return
    if nv == 1:
        yield (base[0] + total,)
        return
    for i in range(nv):
        w = list(base)
        w[i] += total
        yield tuple(w)
    for i in range(nv):
        heavy = nv - 1 if i != nv - 1 else nv - 2
        for t in singles:
            add = t - base[i]
            if add < 0 or add > total:
                continue
            w = list(base)
            w[i] = t
            w[heavy] += total - add
            yield tuple(w)
    # pairs at a threshold together: two probe vertices, remainder on a third
    if nv >= 3:
        for i, j in itertools.combinations(range(nv - 1), 2):
            for t in pairs:
                a = t // 2
                b = t - a
                if a < base[i] or b < base[j]:
                    continue
                add = a - base[i] + b - base[j]
                if add > total:
                    continue
                w = list(base)
                w[i], w[j] = a, b
                w[nv - 1] += total - add
                yield tuple(w)


def _random_assignments(shape: GraphShape, g: int, probes: List[int], count: int,
                        rng: random.Random) -> Iterator[Tuple[int, ...]]:
    base = shape.min_weights()
    nv = shape.n_vertices
    total = g - shape.first_betti - sum(base)
    if total < 0 or nv == 1:
        return
    small = max(probes) if probes else total
    for _ in range(count):
        heavy = rng.randrange(nv)
        left = total
        w = list(base)
        for v in range(nv):
            if v == heavy or left == 0:
                continue
            r = rng.random()
            if r < 0.4:
                extra = rng.choice(probes) - base[v]
                if extra < 0:
                    extra = 0
            elif r < 0.8:
                extra = rng.randint(0, min(left, small))
            else:
                extra = rng.randint(0, left)
            extra = min(extra, left)
            w[v] += extra
            left -= extra
        w[heavy] += left
        yield tuple(w)


def enumerate_family(p: WeakParams, g: int, n: int,
                     strategy: Optional[WeightStrategy] = None,
                     budget: Optional[int] = None) -> GraphFamily:
    if 2 * g - 2 + n <= 0:
        raise UnstableParametersError(f"2g-2+n = {2 * g - 2 + n} <= 0 for (g, n) = ({g}, {n})")
    strategy = strategy or WeightStrategy()
    budget = default_budget() if budget is None else budget
    shapes = enumerate_shapes(p, n)
    if strategy.kind == "exhaustive":
        needed = sum(composition_count(s, g) for s in shapes)
        if needed > budget:
            raise BudgetExceededError(
                f"exhaustive enumeration needs {needed} weight assignments, budget is {budget}")
    probes = probe_weights(p, strategy.probes)
    members: Dict[bytes, StableGraph] = {}
    for idx, shape in enumerate(shapes):
        if strategy.kind == "exhaustive":
            assignments: Iterable = _exhaustive_assignments(shape, g)
        else:
            assignments = _probe_assignments(shape, g, p, strategy.probes)
            if strategy.kind == "sampled":
                rng = random.Random(f"{strategy.seed}:{p.k}:{g}:{n}:{idx}")
                assignments = itertools.chain(
                    assignments, _random_assignments(shape, g, probes, strategy.count, rng))
        seen = set()
        for weights in assignments:
            if weights in seen:
                continue
            seen.add(weights)
            G = shape.graph(weights)
            if not validate(G, g):
                continue
            H = canonical_graph(G)
            members.setdefault(canonical_form(H), H)
    return GraphFamily(p.k, g, n, strategy, members)


def phi_fibers(family: GraphFamily, p: WeakParams) -> Dict[bytes, List[bytes]]:
    """Group members by the canonical form of their image under the contraction map."""
    fibers: Dict[bytes, List[bytes]] = defaultdict(list)
    for key, G in family.members.items():
        fibers[canonical_form(phi_map(G, p))].append(key)
    return {key: sorted(fibers[key]) for key in sorted(fibers)}


def family_stats(family: GraphFamily, p: WeakParams) -> dict:
    codim = Counter()
    fixed = 0
    ranges: Dict[int, list] = {}
    for G in family:
        c = G.num_edges
        codim[c] += 1
        fixed += is_phi_fixed(G, p)
        iv = index_vector(G, p)
        lo_hi = ranges.setdefault(c, [iv, iv])
        lo_hi[0] = min(lo_hi[0], iv)
        lo_hi[1] = max(lo_hi[1], iv)
    sizes = Counter(len(v) for v in phi_fibers(family, p).values()) if len(family) else Counter()
    return {
        "k": family.k,
        "g": family.g,
        "n": family.n,
        "count": len(family),
        "codimension_counts": {str(c): codim[c] for c in sorted(codim)},
        "fixed_points": fixed,
        "fiber_size_histogram": {str(s): sizes[s] for s in sorted(sizes)},
        "index_range": {str(c): {"min": str(ranges[c][0]), "max": str(ranges[c][1])}
                        for c in sorted(ranges)},
    }
