import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from stablegraph import _pykernels, kernels
from stablegraph.graph import _invariant_blocks
from stablegraph.weak import WeakParams

ck = pytest.importorskip("stablegraph._ckernels", reason="compiled kernels not built")


def kernel_args(G):
    return G.num_vertices, list(G.weights), [i for i, _ in G.edges], [j for _, j in G.edges]


@settings(max_examples=300)
@given(graphs(max_vertices=7, max_extra_edges=4, max_weight=200), st.integers(0, 24))
def test_backends_agree_on_weak_kernels(G, k):
    nv, w, eu, ev = kernel_args(G)
    th = list(WeakParams(k).thresholds(nv))
    genera = _pykernels.subset_genera(nv, w, eu, ev)
    assert ck.subset_genera(nv, w, eu, ev) == genera
    assert ck.max_weak_mask(nv, w, eu, ev, th) == _pykernels.max_weak_mask(nv, w, eu, ev, th)
    assert ck.union_closure_violation(nv, genera, th) == \
        _pykernels.union_closure_violation(nv, genera, th)
    bound = WeakParams(k).L
    assert ck.genus_union_bound_violation(nv, genera, bound) == \
        _pykernels.genus_union_bound_violation(nv, genera, bound)


@settings(max_examples=300)
@given(graphs(max_vertices=8, max_extra_edges=5, max_weight=2, stable=False))
def test_backends_agree_on_canonical_permutation(G):
    adj, vblock, posblock = _invariant_blocks(G)
    flat = [x for row in adj for x in row]
    nv = G.num_vertices
    assert ck.canonical_permutation(nv, flat, vblock, posblock) == \
        _pykernels.canonical_permutation(nv, flat, vblock, posblock)


def test_violation_kernels_find_planted_pairs():
    # genera chosen by hand: masks 1 and 2 weak, their union not
    genera = [0, 1, 1, 5]
    thresholds = [2, 1, 0]
    for mod in (ck, _pykernels):
        assert mod.union_closure_violation(2, genera, thresholds) == (1, 2)
        assert mod.genus_union_bound_violation(2, genera, 2) == (1, 2)
        assert mod.genus_union_bound_violation(2, genera, 3) is None


def test_huge_weights_fall_back_to_python():
    w = [1 << 62, 3]
    assert kernels.subset_genera(2, w, [0], [1]) == _pykernels.subset_genera(2, w, [0], [1])
    assert kernels.max_weak_mask(2, w, [0], [1], [10, 10, 10]) == 2


def test_env_var_selects_pure_python():
    env = dict(os.environ, STABLEGRAPH_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import stablegraph.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_default_backend_is_compiled():
    if os.environ.get("STABLEGRAPH_PURE_PYTHON", "") not in ("", "0"):
        pytest.skip("pure-Python backend forced")
    assert kernels.BACKEND == "cython"
