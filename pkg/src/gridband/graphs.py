"""Simple undirected graphs with 1-based vertex ids, plus the standard families.

Grid convention: ``grid(m, n)`` has n rows (counted bottom-up) and m columns
(left to right); the cell at (row, col) is vertex ``(row - 1) * m + col``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class DisconnectedGraphError(ValueError):
    """Raised by operations that require a connected graph."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[frozenset[int], ...]  # index 0 unused
    family: tuple | None = None  # e.g. ("grid", 5, 3); set by the generators

    @staticmethod
    def from_edges(vertex_count: int, edges, family=None) -> "Graph":
        if vertex_count < 1:
            raise ValueError(f"vertex_count must be positive, got {vertex_count}")
        adj: list[set[int]] = [set() for _ in range(vertex_count + 1)]
        for u, v in edges:
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range [1,{vertex_count}]")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(vertex_count, tuple(frozenset(s) for s in adj), family)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adjacency) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return sorted(
            (u, v)
            for u in range(1, self.vertex_count + 1)
            for v in self.adjacency[u]
            if u < v
        )

    def delete_edges(self, edges) -> "Graph":
        drop = {frozenset(e) for e in edges}
        for e in drop:
            u, v = tuple(e)
            if not self.has_edge(u, v):
                raise ValueError(f"cannot delete non-edge {tuple(sorted(e))}")
        kept = [e for e in self.edges() if frozenset(e) not in drop]
        return Graph.from_edges(self.vertex_count, kept)

    def is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        seen = {1}
        queue = deque([1])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count


def grid_vertex(row: int, col: int, m: int) -> int:
    """Vertex id of the cell at (row, col) in an m-column grid."""
    return (row - 1) * m + col


def grid_cell(v: int, m: int) -> tuple[int, int]:
    """(row, col) of vertex v in an m-column grid."""
    return (v - 1) // m + 1, (v - 1) % m + 1


def grid(m: int, n: int) -> Graph:
    """Rectangular grid with m columns and n rows (2mn - m - n edges)."""
    if m < 1 or n < 1:
        raise ValueError(f"grid dimensions must be positive, got ({m},{n})")
    edges = []
    for r in range(1, n + 1):
        for c in range(1, m + 1):
            v = grid_vertex(r, c, m)
            if c < m:
                edges.append((v, grid_vertex(r, c + 1, m)))
            if r < n:
                edges.append((v, grid_vertex(r + 1, c, m)))
    return Graph.from_edges(m * n, edges, family=("grid", m, n))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)], family=("path", n))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph.from_edges(n, edges, family=("cycle", n))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete needs n >= 1, got {n}")
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Graph.from_edges(n, edges, family=("complete", n))


def wheel(m: int) -> Graph:
    """Cycle on vertices 1..m-1 plus the center vertex m joined to all of them."""
    if m < 4:
        raise ValueError(f"wheel needs m >= 4, got {m}")
    rim = [(i, i + 1) for i in range(1, m - 1)] + [(m - 1, 1)]
    spokes = [(i, m) for i in range(1, m)]
    return Graph.from_edges(m, rim + spokes, family=("wheel", m))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts {1..m} and {m+1..m+n}."""
    if not m >= n >= 1:
        raise ValueError(f"complete_bipartite needs m >= n >= 1, got ({m},{n})")
    edges = [(u, m + v) for u in range(1, m + 1) for v in range(1, n + 1)]
    return Graph.from_edges(m + n, edges, family=("complete_bipartite", m, n))


# the single edge between the two wheel centers
DOUBLE_WHEEL_AXIS_EDGE = (7, 14)


def double_wheel_axis() -> Graph:
    """Two copies of the 7-vertex wheel joined by an edge between the centers."""
    w = wheel(7)
    edges = w.edges()
    shifted = [(u + 7, v + 7) for u, v in edges]
    return Graph.from_edges(
        14, edges + shifted + [DOUBLE_WHEEL_AXIS_EDGE], family=("double_wheel_axis",)
    )


def diameter(g: Graph) -> int:
    """Max shortest-path distance over all pairs, by BFS from every vertex."""
    n = g.vertex_count
    best = 0
    for src in range(1, n + 1):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if len(dist) < n:
            raise DisconnectedGraphError("diameter is undefined for disconnected graphs")
        best = max(best, max(dist.values()))
    return best


def write_edge_list(g: Graph) -> str:
    """Edge-list text: line 1 "v e", then one "u v" line per edge."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad edge-list header: {lines[0]!r}")
    v, e = int(head[0]), int(head[1])
    if len(lines) - 1 != e:
        raise ValueError(f"header promises {e} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(v, edges)
