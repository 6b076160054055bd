"""Pure-Python search kernels; the compiled module in _core.pyx mirrors these.

All kernels work on 0-based CSR adjacency (nbr_flat, nbr_ptr) and 0-based
positions.  Node counting, branch order and symmetry breaking are identical
between the two backends so that values, statuses and node counts agree.
"""

from __future__ import annotations

import time

YES, NO, UNKNOWN = 1, 0, -1

_CHECK_EVERY = 65536


def _adjacency(n, nbr_flat, nbr_ptr):
    return [list(nbr_flat[nbr_ptr[v] : nbr_ptr[v + 1]]) for v in range(n)]


def decide_bandwidth(n, nbr_flat, nbr_ptr, b, max_nodes, deadline=0.0):
    """Is there a numbering with all edge lengths <= b?

    Returns (status, nodes, labels) with labels a 0-based list (label of vertex
    v is labels[v] + 1) when status is YES.
    """
    nbr = _adjacency(n, nbr_flat, nbr_ptr)
    pos = [-1] * n
    vert = [-1] * n
    pending = [len(nbr[v]) for v in range(n)]  # unplaced-neighbor counts
    nodes = 0
    out_of_budget = False
    witness = None

    def place(u, p):
        pos[u] = p
        vert[p] = u
        for w in nbr[u]:
            pending[w] -= 1

    def unplace(u, p):
        pos[u] = -1
        vert[p] = -1
        for w in nbr[u]:
            pending[w] += 1

    def rec(p):
        nonlocal nodes, out_of_budget, witness
        if p == n:
            witness = list(pos)
            return YES
        q = p - b
        forced = -1
        if q >= 0:
            w = vert[q]
            if pending[w] >= 2:
                return NO
            if pending[w] == 1:
                forced = next(x for x in nbr[w] if pos[x] < 0)
        if forced >= 0:
            candidates = [forced]
        else:
            candidates = [u for u in range(n) if pos[u] < 0]
        for u in candidates:
            if p == n - 1 and n >= 2 and u < vert[0]:
                continue  # reversal symmetry: vertex of label 1 gets the smaller id
            if pending[u] > b:
                continue  # its unplaced neighbors cannot all fit within distance b
            if any(pos[w] >= 0 and p - pos[w] > b for w in nbr[u]):
                continue
            nodes += 1
            if nodes > max_nodes or (
                deadline and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline
            ):
                out_of_budget = True
                return UNKNOWN
            place(u, p)
            res = rec(p + 1)
            unplace(u, p)
            if res != NO:
                return res
        return NO

    res = rec(0)
    if res == YES:
        return YES, nodes, witness
    return (UNKNOWN if out_of_budget else NO), nodes, None


def min_long_edges_search(n, nbr_flat, nbr_ptr, t, best_init, max_nodes, deadline=0.0):
    """Minimize the number of edges with induced length > t over all numberings.

    best_init is an exclusive bound: only strictly better numberings are
    accepted (pass incumbent value, or edge_count + 1 when none is known).
    Returns (best, proven, nodes, labels) where proven means the search space
    was exhausted, and labels (0-based positions) is the best numbering found
    here, or None when nothing beat best_init.
    """
    nbr = _adjacency(n, nbr_flat, nbr_ptr)
    pos = [-1] * n
    vert = [-1] * n
    pending = [len(nbr[v]) for v in range(n)]
    best = best_init
    witness = None
    nodes = 0
    out_of_budget = False

    def rec(p, committed):
        nonlocal best, witness, nodes, out_of_budget
        if p == n:
            if committed < best:
                best = committed
                witness = list(pos)
            return True
        # pending edges at placed vertices that can no longer stay short
        bound = committed
        for q in range(p):
            c = pending[vert[q]]
            if c:
                cap = q + t - p + 1  # remaining positions that keep w's edges short
                if cap < 0:
                    cap = 0
                if cap < c:
                    bound += c - cap
                    if bound >= best:
                        return True
        for u in range(n):
            if pos[u] >= 0:
                continue
            if p == n - 1 and n >= 2 and u < vert[0]:
                continue
            grown = committed
            for w in nbr[u]:
                if pos[w] >= 0 and p - pos[w] > t:
                    grown += 1
            if grown >= best:
                continue
            nodes += 1
            if nodes > max_nodes or (
                deadline and nodes % _CHECK_EVERY == 0 and time.monotonic() > deadline
            ):
                out_of_budget = True
                return False
            pos[u] = p
            vert[p] = u
            for w in nbr[u]:
                pending[w] -= 1
            ok = rec(p + 1, grown)
            pos[u] = -1
            vert[p] = -1
            for w in nbr[u]:
                pending[w] += 1
            if not ok:
                return False
        return True

    proven = rec(0, 0) and not out_of_budget
    return best, proven, nodes, witness


def vi_table(n, masks):
    """Subset DP for the vertex-isoperimetric number.

    f(S) = max(boundary(S), min over v in S of f(S minus v)); returns the full
    table as a bytearray indexed by subset bitmask.
    """
    size = 1 << n
    full = size - 1
    f = bytearray(size)
    for s in range(1, size):
        outside = full & ~s
        boundary = 0
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            if masks[v] & outside:
                boundary += 1
            m &= m - 1
        best = 255
        m = s
        while m:
            low = m & -m
            val = f[s ^ low]
            if val < best:
                best = val
            m &= m - 1
        f[s] = boundary if boundary > best else best
    return f
