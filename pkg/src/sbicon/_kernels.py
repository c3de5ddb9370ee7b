"""Hot loops over CSR adjacency arrays.

All kernels take int64 arrays and never allocate Python objects, so they
compile under ``numba.njit`` and also run unchanged as plain Python when
numba is disabled (see ``_jit``).

CSR convention: the neighbours of ``v`` are ``nbr[ptr[v]:ptr[v + 1]]`` and
``aid``/``eid`` gives the arc or undirected-edge id of each slot.
``skip_*`` arguments of ``-1`` mean "skip nothing".
"""

import numpy as np

from ._jit import njit

OK = 0
DISCONNECTED = 1
CUT_VERTEX = 2


@njit
def mark_reachable(ptr, nbr, aid, start, skip_arc, skip_vertex, seen):
    n = len(ptr) - 1
    stack = np.empty(n, np.int64)
    seen[start] = True
    stack[0] = start
    sp = 1
    count = 1
    while sp > 0:
        sp -= 1
        v = stack[sp]
        for k in range(ptr[v], ptr[v + 1]):
            w = nbr[k]
            if seen[w] or w == skip_vertex or aid[k] == skip_arc:
                continue
            seen[w] = True
            stack[sp] = w
            sp += 1
            count += 1
    return count


@njit
def strongly_connected_without(
    out_ptr, out_nbr, out_aid, in_ptr, in_nbr, in_aid, skip_arc, skip_vertex
):
    n = len(out_ptr) - 1
    n_eff = n - 1 if skip_vertex >= 0 else n
    if n_eff <= 1:
        return True
    root = 1 if skip_vertex == 0 else 0
    seen = np.zeros(n, np.bool_)
    if mark_reachable(out_ptr, out_nbr, out_aid, root, skip_arc, skip_vertex, seen) != n_eff:
        return False
    seen[:] = False
    return mark_reachable(in_ptr, in_nbr, in_aid, root, skip_arc, skip_vertex, seen) == n_eff


@njit
def biconnectivity_without(ptr, nbr, eid, skip_edge, skip_vertex):
    """Return ``(status, witness)`` for the undirected graph minus the skips.

    status OK: biconnected (fewer than two vertices, or K2, count as such).
    DISCONNECTED: witness is a vertex unreachable from the DFS root.
    CUT_VERTEX: witness is an articulation point.
    """
    n = len(ptr) - 1
    n_eff = n - 1 if skip_vertex >= 0 else n
    if n_eff <= 1:
        return OK, -1
    root = 1 if skip_vertex == 0 else 0
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    pedge = np.full(n, -1, np.int64)
    it = ptr[:-1].copy()
    stack = np.empty(n, np.int64)
    disc[root] = 0
    stack[0] = root
    sp = 1
    t = 1
    root_children = 0
    while sp > 0:
        v = stack[sp - 1]
        if it[v] < ptr[v + 1]:
            k = it[v]
            it[v] += 1
            w = nbr[k]
            e = eid[k]
            if w == skip_vertex or e == skip_edge or e == pedge[v]:
                continue
            if disc[w] < 0:
                disc[w] = t
                low[w] = t
                t += 1
                parent[w] = v
                pedge[w] = e
                stack[sp] = w
                sp += 1
                if v == root:
                    root_children += 1
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            sp -= 1
            p = parent[v]
            if p >= 0:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    return CUT_VERTEX, p
    if t < n_eff:
        for v in range(n):
            if v != skip_vertex and disc[v] < 0:
                return DISCONNECTED, v
    if root_children >= 2:
        return CUT_VERTEX, root
    return OK, -1


@njit
def block_labels(ptr, nbr, eid, edge_active):
    """Hopcroft-Tarjan blocks of the active edges.

    Returns ``(block, count)`` where ``block[e]`` is the block index of
    edge ``e`` (``-1`` if inactive). Blocks are numbered in the order the
    DFS closes them; isolated vertices get no block here.
    """
    n = len(ptr) - 1
    k = len(edge_active)
    block = np.full(k, -1, np.int64)
    disc = np.full(n, -1, np.int64)
    low = np.zeros(n, np.int64)
    parent = np.full(n, -1, np.int64)
    pedge = np.full(n, -1, np.int64)
    it = ptr[:-1].copy()
    stack = np.empty(n, np.int64)
    estack = np.empty(k, np.int64)
    es = 0
    nb = 0
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = t
        low[root] = t
        t += 1
        stack[0] = root
        sp = 1
        while sp > 0:
            v = stack[sp - 1]
            if it[v] < ptr[v + 1]:
                kk = it[v]
                it[v] += 1
                e = eid[kk]
                if not edge_active[e] or e == pedge[v]:
                    continue
                w = nbr[kk]
                if disc[w] < 0:
                    estack[es] = e
                    es += 1
                    disc[w] = t
                    low[w] = t
                    t += 1
                    parent[w] = v
                    pedge[w] = e
                    stack[sp] = w
                    sp += 1
                elif disc[w] < disc[v]:
                    estack[es] = e
                    es += 1
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                sp -= 1
                p = parent[v]
                if p >= 0:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        while True:
                            es -= 1
                            f = estack[es]
                            block[f] = nb
                            if f == pedge[v]:
                                break
                        nb += 1
    return block, nb


@njit
def vertex_blocks(ptr, eid, block, nb):
    """Sorted block ids of each vertex, as CSR ``(vptr, vblk)``."""
    n = len(ptr) - 1
    keys = np.empty(len(eid), np.int64)
    c = 0
    for v in range(n):
        for k in range(ptr[v], ptr[v + 1]):
            b = block[eid[k]]
            if b >= 0:
                keys[c] = v * nb + b
                c += 1
    uk = np.unique(keys[:c])
    vptr = np.zeros(n + 1, np.int64)
    vblk = np.empty(len(uk), np.int64)
    for i in range(len(uk)):
        vptr[uk[i] // nb + 1] += 1
        vblk[i] = uk[i] % nb
    for v in range(n):
        vptr[v + 1] += vptr[v]
    return vptr, vblk


@njit
def share_block(vptr, vblk, u, w):
    i = vptr[u]
    j = vptr[w]
    while i < vptr[u + 1] and j < vptr[w + 1]:
        if vblk[i] == vblk[j]:
            return True
        if vblk[i] < vblk[j]:
            i += 1
        else:
            j += 1
    return False


@njit
def augment(ptr, nbr, eid, edge_count, arc_edge, tails, heads, in_y):
    """Grow ``in_y`` until its underlying graph has a single block.

    Each round takes the first arc, in arc order, whose endpoints share no
    block of the current subgraph. Returns ``(added, counts, status)`` with
    status 0 on success, 1 if no such arc exists while several blocks
    remain, 2 if the round count exceeds ``n``. ``in_y`` is updated in place.
    """
    n = len(ptr) - 1
    m = len(tails)
    active = np.zeros(edge_count, np.bool_)
    for a in range(m):
        if in_y[a]:
            active[arc_edge[a]] = True
    added = np.empty(n + 1, np.int64)
    counts = np.empty(n + 1, np.int64)
    steps = 0
    scan = 0
    while True:
        block, nb = block_labels(ptr, nbr, eid, active)
        if nb <= 1:
            return added[:steps], counts[:steps], 0
        if steps > n:
            return added[:steps], counts[:steps], 2
        counts[steps] = nb
        vptr, vblk = vertex_blocks(ptr, eid, block, nb)
        found = -1
        # An arc skipped here keeps sharing a block after later merges,
        # so the scan position never needs to move backwards.
        while scan < m:
            a = scan
            scan += 1
            if in_y[a]:
                continue
            if not share_block(vptr, vblk, tails[a], heads[a]):
                found = a
                break
        if found < 0:
            return added[:steps], counts[:steps], 1
        in_y[found] = True
        active[arc_edge[found]] = True
        added[steps] = found
        steps += 1


@njit
def b_bridge_flags(uptr, unbr, ueid, arc_edge, antiparallel, candidates):
    """``flags[i]`` is True iff deleting arc ``candidates[i]`` breaks strong biconnectivity.

    Assumes the full graph is strongly biconnected and that no candidate is
    a strong bridge, so only the underlying biconnectivity can fail. An arc
    with an antiparallel partner cannot change the underlying graph at all.
    """
    flags = np.zeros(len(candidates), np.bool_)
    for i in range(len(candidates)):
        a = candidates[i]
        if not antiparallel[a]:
            status, _ = biconnectivity_without(uptr, unbr, ueid, arc_edge[a], -1)
            flags[i] = status != OK
    return flags


@njit
def b_articulation_flags(
    out_ptr, out_nbr, out_aid, in_ptr, in_nbr, in_aid, uptr, unbr, ueid, candidates
):
    flags = np.zeros(len(candidates), np.bool_)
    for i in range(len(candidates)):
        v = candidates[i]
        if not strongly_connected_without(
            out_ptr, out_nbr, out_aid, in_ptr, in_nbr, in_aid, -1, v
        ):
            flags[i] = True
        else:
            status, _ = biconnectivity_without(uptr, unbr, ueid, -1, v)
            flags[i] = status != OK
    return flags
