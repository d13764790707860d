"""Explicit graphs used as worked examples."""

from __future__ import annotations

from typing import List, Tuple

from .graph import StableGraph

CHAIN_K = 9
CHAIN_WEIGHTS = (11, 11, 22, 44, 88)

# Leaf weights for the four-leaf star at k=9, g=3000.  Each leaf weight must
# exceed phi_9(3) = 266.2, any two leaves together phi_9(2) = 585.64 and any
# three phi_9(1) = 1288.4; otherwise leaves join the weak subgraph.
STAR_K = 9
STAR_LEAVES = (300, 400, 700, 1600)


def chain_graph(g: int = 3000) -> StableGraph:
    """Path p1 - ... - p6 with weights 11, 11, 22, 44, 88, g - 176."""
    weights = CHAIN_WEIGHTS + (g - sum(CHAIN_WEIGHTS),)
    return StableGraph(weights, (0,) * 6, tuple((i, i + 1) for i in range(5)))


def star_graph(leaves: Tuple[int, ...] = STAR_LEAVES) -> StableGraph:
    """Weight-0 center (vertex 0) joined once to each leaf."""
    nv = len(leaves) + 1
    return StableGraph((0,) + tuple(leaves), (0,) * nv,
                       tuple((0, i) for i in range(1, nv)))


def star_degenerations(leaves: Tuple[int, ...] = STAR_LEAVES) -> List[StableGraph]:
    """The center split into two weight-0 vertices carrying two leaves each.

    Vertices 0 and 1 are the two halves of the center; one pairing per
    partition of the four leaves into two pairs.
    """
    assert len(leaves) == 4
    out = []
    for partner in (1, 2, 3):
        first = (0, partner)
        second = tuple(i for i in range(4) if i not in first)
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in first]
        edges += [(1, 2 + i) for i in second]
        out.append(StableGraph((0, 0) + tuple(leaves), (0,) * 6, tuple(edges)))
    return out


def codim11_graph(g: int = 10 ** 6, n: int = 3) -> StableGraph:
    """Weights 1 and g - 11 joined by 11 edges, all legs on the heavy vertex."""
    return StableGraph((1, g - 11), (0, n), ((0, 1),) * 11)


def codim1_graph(g: int = 10 ** 6, n: int = 10) -> StableGraph:
    """Weights 1 and g - 1 joined by one edge, ten legs on the weight-1 vertex."""
    if n < 10:
        raise ValueError("needs at least 10 legs")
    return StableGraph((1, g - 1), (10, n - 10), ((0, 1),))

