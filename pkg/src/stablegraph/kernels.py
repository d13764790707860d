"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when
``STABLEGRAPH_PURE_PYTHON`` is set to a non-empty value other than ``0``,
the pure-Python kernels are used.  Inputs that do not fit the compiled
kernel's fixed-width integers fall back to Python per call.
"""

import os

from . import _pykernels

_compiled = None
if os.environ.get("STABLEGRAPH_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _pykernels
BACKEND = _impl.BACKEND

_INT64_SAFE = 1 << 60


def _fits(*seqs):
    return all(-_INT64_SAFE < x < _INT64_SAFE for seq in seqs for x in seq)


def subset_genera(nv, weights, eu, ev):
    if _impl is _pykernels or not _fits(weights):
        return _pykernels.subset_genera(nv, weights, eu, ev)
    return _impl.subset_genera(nv, weights, eu, ev)


def max_weak_mask(nv, weights, eu, ev, thresholds):
    if _impl is _pykernels or not _fits(weights, thresholds):
        return _pykernels.max_weak_mask(nv, weights, eu, ev, thresholds)
    return _impl.max_weak_mask(nv, weights, eu, ev, thresholds)


def union_closure_violation(nv, genera, thresholds):
    if _impl is _pykernels or not _fits(genera, thresholds):
        return _pykernels.union_closure_violation(nv, genera, thresholds)
    return _impl.union_closure_violation(nv, genera, thresholds)


def genus_union_bound_violation(nv, genera, bound):
    if _impl is _pykernels or not _fits(genera, (bound,)):
        return _pykernels.genus_union_bound_violation(nv, genera, bound)
    return _impl.genus_union_bound_violation(nv, genera, bound)


def canonical_permutation(nv, adj, vblock, posblock):
    return _impl.canonical_permutation(nv, adj, vblock, posblock)
