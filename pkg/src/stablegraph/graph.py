"""Weighted stable graphs with legs.

A :class:`StableGraph` stores, per vertex, a weight (genus of the
normalized component) and a count of legs (marked points, unlabeled), plus
a tuple of edges.  Edges are unordered vertex pairs normalized to
``(i, j)`` with ``i <= j``; a loop has ``i == j``.  The position of an edge
in ``edges`` is its identifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import kernels

MAX_CANON_VERTICES = 12

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Malformed graph data or an invalid argument to a graph operation."""


class VertexBoundError(GraphError):
    """Too many vertices for exhaustive permutation search."""


@dataclass(frozen=True)
class StableGraph:
    weights: Tuple[int, ...]
    legs: Tuple[int, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        legs = tuple(int(x) for x in self.legs)
        if len(weights) != len(legs):
            raise GraphError(f"{len(weights)} weights but {len(legs)} leg counts")
        if any(w < 0 for w in weights) or any(x < 0 for x in legs):
            raise GraphError("weights and leg counts must be non-negative")
        nv = len(weights)
        edges = []
        for e in self.edges:
            i, j = (int(x) for x in e)
            if not (0 <= i < nv and 0 <= j < nv):
                raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{nv - 1}")
            edges.append((i, j) if i <= j else (j, i))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "legs", legs)
        object.__setattr__(self, "edges", tuple(edges))

    @classmethod
    def smooth(cls, g: int, n: int = 0) -> "StableGraph":
        return cls((g,), (n,), ())

    @property
    def num_vertices(self) -> int:
        return len(self.weights)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_legs(self) -> int:
        return sum(self.legs)

    def valence(self, v: int) -> int:
        """Legs plus edge half-edges at ``v``; a loop contributes two."""
        val = self.legs[v]
        for i, j in self.edges:
            val += (i == v) + (j == v)
        return val

    def loops_at(self, v: int) -> int:
        return sum(1 for i, j in self.edges if i == j == v)

    def first_betti(self) -> int:
        return self.num_edges - self.num_vertices + 1

    def adjacency(self) -> List[List[int]]:
        nv = self.num_vertices
        adj = [[0] * nv for _ in range(nv)]
        for i, j in self.edges:
            adj[i][j] += 1
            if i != j:
                adj[j][i] += 1
        return adj

    def is_connected(self) -> bool:
        nv = self.num_vertices
        if nv == 0:
            return False
        return _count_components(range(nv), self.edges) == 1

    def relabel(self, perm: Sequence[int]) -> "StableGraph":
        """Graph whose vertex ``i`` is this graph's vertex ``perm[i]``."""
        inv = [0] * len(perm)
        for new, old in enumerate(perm):
            inv[old] = new
        return StableGraph(
            tuple(self.weights[old] for old in perm),
            tuple(self.legs[old] for old in perm),
            tuple((inv[i], inv[j]) for i, j in self.edges),
        )


def _count_components(members: Iterable[int], edges: Iterable[Edge]) -> int:
    members = list(members)
    parent = {v: v for v in members}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        if i in parent and j in parent:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    return sum(1 for v in members if find(v) == v)


@dataclass(frozen=True)
class ValidationResult:
    problems: Tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.valid


def validate(G: StableGraph, expected_genus: Optional[int] = None) -> ValidationResult:
    """Collect every violated stable-graph invariant of ``G``."""
    problems = []
    if G.num_vertices == 0:
        return ValidationResult(("graph has no vertices",))
    if not G.is_connected():
        problems.append("disconnected")
    for v in range(G.num_vertices):
        if 2 * G.weights[v] - 2 + G.valence(v) <= 0:
            problems.append(f"unstable vertex {v}")
    if expected_genus is not None and genus(G) != expected_genus:
        problems.append(f"genus {genus(G)} != expected {expected_genus}")
    return ValidationResult(tuple(problems))


def genus(G: StableGraph) -> int:
    return G.first_betti() + sum(G.weights)


@dataclass(frozen=True)
class FullSubgraph:
    parent: StableGraph = field(repr=False)
    members: FrozenSet[int]
    internal_edges: Tuple[int, ...]
    component_count: int
    genus: int

    @property
    def num_vertices(self) -> int:
        return len(self.members)


def full_subgraph(G: StableGraph, members: Iterable[int]) -> FullSubgraph:
    members = frozenset(members)
    for v in members:
        if not 0 <= v < G.num_vertices:
            raise GraphError(f"vertex {v} out of range")
    internal = tuple(idx for idx, (i, j) in enumerate(G.edges)
                     if i in members and j in members)
    comps = _count_components(sorted(members), (G.edges[idx] for idx in internal))
    g = sum(G.weights[v] for v in members) + len(internal) - len(members) + comps
    return FullSubgraph(G, members, internal, comps, g)


def _check_edge_ids(G: StableGraph, edge_ids: Iterable[int]) -> FrozenSet[int]:
    ids = frozenset(edge_ids)
    for e in ids:
        if not isinstance(e, int) or not 0 <= e < G.num_edges:
            raise GraphError(f"edge identifier {e!r} out of range")
    return ids


def contract_edge(G: StableGraph, e: int) -> StableGraph:
    """Contract a single edge by iterative merging.

    Kept independent of :func:`contract_edges` so the two can be checked
    against each other.
    """
    _check_edge_ids(G, [e])
    i, j = G.edges[e]
    rest = G.edges[:e] + G.edges[e + 1:]
    if i == j:
        weights = list(G.weights)
        weights[i] += 1
        return StableGraph(tuple(weights), G.legs, rest)
    # merge j into i (i < j), then close the gap left by j
    def remap(x):
        x = i if x == j else x
        return x - 1 if x > j else x

    weights = list(G.weights)
    legs = list(G.legs)
    weights[i] += weights.pop(j)
    legs[i] += legs.pop(j)
    return StableGraph(tuple(weights), tuple(legs),
                       tuple((remap(a), remap(b)) for a, b in rest))


def contraction_map(G: StableGraph, edge_ids: Iterable[int]) -> Tuple[StableGraph, Tuple[int, ...]]:
    """Contract a set of edges at once.

    Returns the quotient graph and the vertex map ``old -> new``.  Classes of
    merged vertices are numbered by their smallest original vertex, and the
    surviving edges keep their relative order.
    """
    ids = _check_edge_ids(G, edge_ids)
    nv = G.num_vertices
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in ids:
        a, b = G.edges[idx]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in range(nv)})
    new_index = {r: n for n, r in enumerate(roots)}
    vmap = tuple(new_index[find(v)] for v in range(nv))

    nn = len(roots)
    wsum = [0] * nn
    legs = [0] * nn
    size = [0] * nn
    contracted = [0] * nn
    for v in range(nv):
        wsum[vmap[v]] += G.weights[v]
        legs[vmap[v]] += G.legs[v]
        size[vmap[v]] += 1
    for idx in ids:
        contracted[vmap[G.edges[idx][0]]] += 1
    # each class becomes one vertex carrying the genus of its contracted part
    weights = tuple(wsum[c] + contracted[c] - size[c] + 1 for c in range(nn))
    edges = tuple((vmap[a], vmap[b]) for idx, (a, b) in enumerate(G.edges)
                  if idx not in ids)
    return StableGraph(weights, tuple(legs), edges), vmap


def contract_edges(G: StableGraph, edge_ids: Iterable[int]) -> StableGraph:
    return contraction_map(G, edge_ids)[0]


def _invariant_blocks(G: StableGraph):
    """Isomorphism-invariant vertex classes, sorted.

    Returns (vertex order, block id per vertex, block id per position).
    """
    nv = G.num_vertices
    adj = G.adjacency()
    keys = []
    for v in range(nv):
        nbrs = sorted((G.weights[u], G.legs[u], adj[v][u])
                      for u in range(nv) if u != v and adj[v][u])
        keys.append((G.weights[v], G.legs[v], adj[v][v], G.valence(v), tuple(nbrs)))
    distinct = sorted(set(keys))
    block_of_key = {k: b for b, k in enumerate(distinct)}
    vblock = [block_of_key[k] for k in keys]
    posblock = sorted(vblock)
    return adj, vblock, posblock


def canonical_graph(G: StableGraph) -> StableGraph:
    """Canonical representative of the isomorphism class of ``G``.

    Vertices are put in canonical order and edges sorted; two graphs are
    isomorphic iff their canonical graphs are equal.
    """
    nv = G.num_vertices
    if nv > MAX_CANON_VERTICES:
        raise VertexBoundError(f"{nv} vertices exceeds the bound {MAX_CANON_VERTICES}")
    if nv == 0:
        return G
    adj, vblock, posblock = _invariant_blocks(G)
    flat = [x for row in adj for x in row]
    perm = kernels.canonical_permutation(nv, flat, vblock, posblock)
    H = G.relabel(perm)
    return StableGraph(H.weights, H.legs, tuple(sorted(H.edges)))


def canonical_form(G: StableGraph) -> bytes:
    from .stg import dumps
    return dumps(canonical_graph(G)).encode("utf-8")


def is_isomorphic(A: StableGraph, B: StableGraph) -> bool:
    if (A.num_vertices, A.num_edges, A.num_legs) != (B.num_vertices, B.num_edges, B.num_legs):
        return False
    return canonical_graph(A) == canonical_graph(B)


def automorphisms(G: StableGraph) -> List[Tuple[int, ...]]:
    """All vertex permutations preserving weights, legs and edge multiplicities.

    ``sigma[v]`` is the image of vertex ``v``.
    """
    nv = G.num_vertices
    if nv > MAX_CANON_VERTICES:
        raise VertexBoundError(f"{nv} vertices exceeds the bound {MAX_CANON_VERTICES}")
    adj, vblock, _ = _invariant_blocks(G)
    found = []
    sigma = [0] * nv
    used = [False] * nv

    def rec(v):
        if v == nv:
            found.append(tuple(sigma))
            return
        for u in range(nv):
            if used[u] or vblock[u] != vblock[v]:
                continue
            if any(adj[v][x] != adj[u][sigma[x]] for x in range(v)) or adj[v][v] != adj[u][u]:
                continue
            sigma[v] = u
            used[u] = True
            rec(v + 1)
            used[u] = False

    rec(0)
    return found

