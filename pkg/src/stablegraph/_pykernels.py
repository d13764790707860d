"""Pure-Python kernels.

Reference implementations of the hot loops; ``_ckernels.pyx`` mirrors every
function here with identical signatures and results.  Vertex subsets are
bitmasks over ``range(nv)``; edges are given as two parallel endpoint lists.
"""

BACKEND = "python"


def _components(nv, mask, eu, ev):
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    internal = 0
    for u, v in zip(eu, ev):
        if (mask >> u) & 1 and (mask >> v) & 1:
            internal += 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    comps = 0
    for x in range(nv):
        if (mask >> x) & 1 and find(x) == x:
            comps += 1
    return internal, comps


def subset_genera(nv, weights, eu, ev):
    """Genus of the full subgraph on every vertex bitmask, indexed by mask."""
    out = [0] * (1 << nv)
    for mask in range(1, 1 << nv):
        internal, comps = _components(nv, mask, eu, ev)
        size = 0
        wsum = 0
        for x in range(nv):
            if (mask >> x) & 1:
                size += 1
                wsum += weights[x]
        out[mask] = wsum + internal - size + comps
    return out


def _masks_by_size(nv):
    return sorted(range(1 << nv), key=lambda m: (-bin(m).count("1"), m))


def max_weak_mask(nv, weights, eu, ev, thresholds):
    """Largest weak vertex set, searching subsets by decreasing size.

    ``thresholds[m]`` is the integer floor of the weakness bound for a
    subset whose complement has ``m`` vertices.  The empty mask is always
    weak, so the search terminates.
    """
    for mask in _masks_by_size(nv):
        size = bin(mask).count("1")
        if mask == 0:
            return 0
        internal, comps = _components(nv, mask, eu, ev)
        wsum = 0
        for x in range(nv):
            if (mask >> x) & 1:
                wsum += weights[x]
        if wsum + internal - size + comps <= thresholds[nv - size]:
            return mask
    return 0


def union_closure_violation(nv, genera, thresholds):
    """First pair of weak masks whose union is not weak, or ``None``."""
    weak = [m for m in range(1 << nv)
            if genera[m] <= thresholds[nv - bin(m).count("1")]]
    for i, a in enumerate(weak):
        for b in weak[i + 1:]:
            u = a | b
            if genera[u] > thresholds[nv - bin(u).count("1")]:
                return (a, b)
    return None


def genus_union_bound_violation(nv, genera, bound):
    """First pair with genus(a|b) > genus(a) + genus(b) + bound, or ``None``."""
    full = 1 << nv
    for a in range(full):
        for b in range(a + 1, full):
            if genera[a | b] > genera[a] + genera[b] + bound:
                return (a, b)
    return None


def canonical_permutation(nv, adj, vblock, posblock):
    """Block-respecting vertex order minimizing the adjacency code.

    ``adj`` is the flat ``nv*nv`` multiplicity matrix, ``vblock[v]`` the
    invariant class of vertex ``v`` and ``posblock[i]`` the class required
    at canonical position ``i``.  The code is read column by column over the
    upper triangle so each placed vertex fixes the next code segment, which
    lets the search prune on prefixes.
    """
    perm = [0] * nv
    used = [False] * nv
    best = []
    cur = []
    best_perm = [None]

    def rec(j, state):
        # state: -1 strictly below best so far (or no best yet), 0 equal
        if j == nv:
            if state < 0 or best_perm[0] is None:
                best[:] = cur
                best_perm[0] = perm[:]
                return True
            return False
        updated = False
        for v in range(nv):
            if used[v] or vblock[v] != posblock[j]:
                continue
            perm[j] = v
            base = len(cur)
            seg = [adj[perm[i] * nv + v] for i in range(j + 1)]
            nstate = state
            if state == 0 and best_perm[0] is not None:
                ref = best[base:base + j + 1]
                if seg > ref:
                    continue
                if seg < ref:
                    nstate = -1
            cur.extend(seg)
            used[v] = True
            if rec(j + 1, nstate):
                # a new best now shares this whole prefix
                state = 0
                updated = True
            used[v] = False
            del cur[base:]
        return updated

    rec(0, -1)
    return best_perm[0]
