"""Weak subgraphs and the contraction map onto the partition index set.

Everything threshold-related is exact: :class:`WeakParams` holds its
constants as :class:`fractions.Fraction`, and the kernels only ever see
``floor`` of a threshold, which is equivalent for integer genera.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import FrozenSet, List, Optional, Tuple

from . import kernels
from .graph import (
    GraphError,
    StableGraph,
    contraction_map,
    full_subgraph,
    genus,
    is_isomorphic,
)


class EdgeBoundError(GraphError):
    """The graph has more edges than the family allows."""


class ContextMismatchError(ValueError):
    """Index vectors or graphs from different (k, g, n) families were compared."""


class NotFixedPointError(ValueError):
    """Operation needs a fixed point of the contraction map."""


@dataclass(frozen=True)
class WeakParams:
    k: int
    L: int = field(init=False)
    alpha: Fraction = field(init=False)
    beta: Fraction = field(init=False)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be non-negative")
        L = self.k // 2 + 1
        alpha = Fraction(2 * L + 1, L)
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", L * L * alpha ** (L + 1))

    @property
    def max_edges(self) -> int:
        return self.L

    @property
    def max_vertices(self) -> int:
        return self.L + 1

    def phi(self, n: int) -> Fraction:
        """Weakness bound for a subgraph whose complement has ``n`` vertices."""
        return self.L * self.L * self.alpha ** (self.L + 1 - n)

    def thresholds(self, nv: int) -> Tuple[int, ...]:
        return _floor_thresholds(self, nv)


def weak_params(k: int) -> WeakParams:
    return WeakParams(k)


@lru_cache(maxsize=None)
def _floor_thresholds(p: WeakParams, nv: int) -> Tuple[int, ...]:
    return tuple(math.floor(p.phi(m)) for m in range(nv + 1))


def phi_threshold(p: WeakParams, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return p.phi(n)


def recurrence_table(p: WeakParams) -> List[dict]:
    """Rows of ``2*phi(n) + L <= phi(n-1)`` for ``1 <= n <= L+1``."""
    rows = []
    for n in range(1, p.L + 2):
        lhs = 2 * p.phi(n) + p.L
        rhs = p.phi(n - 1)
        rows.append({"n": n, "lhs": lhs, "rhs": rhs,
                     "holds": lhs <= rhs, "equality": lhs == rhs})
    return rows


def _check_bound(G: StableGraph, p: WeakParams) -> None:
    if G.num_edges > p.max_edges:
        raise EdgeBoundError(f"{G.num_edges} edges exceeds the bound {p.max_edges} for k={p.k}")


def is_weak(G: StableGraph, members, p: WeakParams) -> bool:
    sub = full_subgraph(G, members)
    return sub.genus <= p.phi(G.num_vertices - sub.num_vertices)


def _mask_to_set(mask: int) -> FrozenSet[int]:
    return frozenset(v for v in range(mask.bit_length()) if (mask >> v) & 1)


@lru_cache(maxsize=1 << 16)
def maximal_weak_subgraph(G: StableGraph, p: WeakParams) -> FrozenSet[int]:
    """Vertex set of the maximal weak subgraph.

    Weak sets are closed under union, so the maximum is the unique weak set
    of largest size; subsets are scanned from the largest down.
    """
    _check_bound(G, p)
    nv = G.num_vertices
    eu = [i for i, _ in G.edges]
    ev = [j for _, j in G.edges]
    mask = kernels.max_weak_mask(nv, list(G.weights), eu, ev, list(p.thresholds(nv)))
    return _mask_to_set(mask)


def strong_vertices(G: StableGraph, p: WeakParams) -> FrozenSet[int]:
    return frozenset(range(G.num_vertices)) - maximal_weak_subgraph(G, p)


def weak_internal_edges(G: StableGraph, p: WeakParams) -> Tuple[int, ...]:
    W = maximal_weak_subgraph(G, p)
    return tuple(idx for idx, (i, j) in enumerate(G.edges) if i in W and j in W)


def phi_map(G: StableGraph, p: WeakParams) -> StableGraph:
    """Contract every edge internal to the maximal weak subgraph."""
    return contraction_map(G, weak_internal_edges(G, p))[0]


def is_phi_fixed(G: StableGraph, p: WeakParams) -> bool:
    return not weak_internal_edges(G, p)


@total_ordering
@dataclass(frozen=True, eq=False)
class IndexVector:
    weights: Tuple[int, ...]
    half_edges: int
    context: Tuple[int, int, int]  # (k, g, n)

    def _key(self, other: "IndexVector"):
        if not isinstance(other, IndexVector):
            return NotImplemented
        if other.context != self.context:
            raise ContextMismatchError(f"index contexts differ: {self.context} vs {other.context}")
        return (self.weights, self.half_edges), (other.weights, other.half_edges)

    def __eq__(self, other):
        if not isinstance(other, IndexVector):
            return NotImplemented
        return (self.context, self.weights, self.half_edges) == \
            (other.context, other.weights, other.half_edges)

    def __hash__(self):
        return hash((self.context, self.weights, self.half_edges))

    def __lt__(self, other):
        keys = self._key(other)
        if keys is NotImplemented:
            return keys
        return keys[0] < keys[1]

    def __str__(self):
        return "[" + ",".join(map(str, self.weights)) + f" | {self.half_edges}]"


def index_vector(G: StableGraph, p: WeakParams) -> IndexVector:
    _check_bound(G, p)
    g = genus(G)
    strong = strong_vertices(G, p)
    ws = sorted((G.weights[v] for v in strong), reverse=True)
    ws += [g] * (p.L + 1 - len(ws))
    half = sum(G.valence(v) for v in strong)
    return IndexVector(tuple(ws), half, (p.k, g, G.num_legs))


def part_order_geq(A: StableGraph, B: StableGraph, p: WeakParams) -> bool:
    if genus(A) != genus(B) or A.num_legs != B.num_legs:
        raise ContextMismatchError("graphs belong to different (g, n) families")
    for G in (A, B):
        if not is_phi_fixed(G, p):
            raise NotFixedPointError("order is only defined on fixed points")
    return index_vector(A, p) > index_vector(B, p) or is_isomorphic(A, B)


def codimension(G: StableGraph) -> int:
    return G.num_edges


def stabilize(G: StableGraph, p: WeakParams, x: int = 1) -> StableGraph:
    """Add ``x * (L+1)! / #strong`` to every strong vertex weight."""
    if x < 0:
        raise ValueError("x must be non-negative")
    if not is_phi_fixed(G, p):
        raise NotFixedPointError("stabilization needs a fixed point")
    strong = strong_vertices(G, p)
    if not strong:
        raise ValueError("graph has no strong vertices")
    step = math.factorial(p.L + 1) // len(strong)
    weights = tuple(w + x * step if v in strong else w for v, w in enumerate(G.weights))
    return StableGraph(weights, G.legs, G.edges)


@dataclass(frozen=True)
class InclusionRecord:
    k_from: int
    k_to: int
    weak_from: FrozenSet[int]
    weak_to: FrozenSet[int]

    @property
    def contained(self) -> bool:
        return self.weak_from <= self.weak_to


def include_into_larger_k(G: StableGraph, k_from: int, k_to: Optional[int] = None) -> InclusionRecord:
    k_to = k_from + 1 if k_to is None else k_to
    p_from, p_to = WeakParams(k_from), WeakParams(k_to)
    _check_bound(G, p_from)
    return InclusionRecord(k_from, k_to,
                           maximal_weak_subgraph(G, p_from),
                           maximal_weak_subgraph(G, p_to))


def inclusion_inequality(l: int, n: int) -> Tuple[Fraction, Fraction, bool]:
    """Exact sides of ``((2l+3)/(l+1))^(l+1-n) (l+1)^2 >= ((2l+1)/l)^(l-n) l^2``."""
    lhs = Fraction(2 * l + 3, l + 1) ** (l + 1 - n) * (l + 1) ** 2
    rhs = Fraction(2 * l + 1, l) ** (l - n) * l * l
    return lhs, rhs, lhs >= rhs
