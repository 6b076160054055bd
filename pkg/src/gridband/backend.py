"""Kernel backend selection: the compiled extension when available, else the
pure-Python twin.  Both expose decide_bandwidth, min_long_edges_search and
vi_table with identical semantics."""

from __future__ import annotations

import numpy as np

from .graphs import Graph

try:  # pragma: no cover - exercised implicitly by whichever build is active
    from . import _core as kernels

    BACKEND = "compiled"
except ImportError:  # pragma: no cover
    from . import _core_py as kernels

    BACKEND = "python"

from . import _core_py as python_kernels

YES, NO, UNKNOWN = 1, 0, -1


def csr_adjacency(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """0-based CSR adjacency (neighbors ascending) as int32 arrays."""
    n = g.vertex_count
    ptr = np.zeros(n + 1, dtype=np.int32)
    flat = []
    for v in range(1, n + 1):
        nbrs = sorted(w - 1 for w in g.adjacency[v])
        flat.extend(nbrs)
        ptr[v] = len(flat)
    return np.asarray(flat, dtype=np.int32), ptr


def neighbor_masks(g: Graph) -> list[int]:
    """0-based adjacency bitmasks for the subset DP."""
    return [
        sum(1 << (w - 1) for w in g.adjacency[v]) for v in range(1, g.vertex_count + 1)
    ]
